#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zks/cli.hpp"
#include "zks/homalg.hpp"
#include "zks/io.hpp"
#include "zks/labelling.hpp"
#include "zks/resolutions.hpp"
#include "zks/ring.hpp"
#include "zks/selftest.hpp"
#include "zks/simplicial.hpp"
#include "zks/stokes.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// Exact conversion between python ints and the arbitrary-precision scalars.
template <>
struct type_caster<zks::Int> {
 public:
  PYBIND11_TYPE_CASTER(zks::Int, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    object repr = reinterpret_steal<object>(PyObject_Str(src.ptr()));
    if (!repr) {
      PyErr_Clear();
      return false;
    }
    try {
      value = zks::Int(repr.cast<std::string>());
    } catch (...) {
      return false;
    }
    return true;
  }

  static handle cast(const zks::Int& src, return_value_policy, handle) {
    return PyLong_FromString(src.str().c_str(), nullptr, 10);
  }
};

}  // namespace pybind11::detail

namespace {

using namespace zks;

IntegerMatrix matrix_from_rows(const std::vector<std::vector<Int>>& rows) {
  long r = static_cast<long>(rows.size());
  long c = rows.empty() ? 0 : static_cast<long>(rows[0].size());
  IntegerMatrix m(r, c);
  for (long i = 0; i < r; ++i) {
    if (static_cast<long>(rows[static_cast<size_t>(i)].size()) != c) {
      throw dimension_error("ragged matrix rows");
    }
    for (long j = 0; j < c; ++j) {
      m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
  }
  return m;
}

std::vector<std::vector<Int>> matrix_to_rows(const IntegerMatrix& m) {
  std::vector<std::vector<Int>> rows(static_cast<size_t>(m.rows()));
  for (long i = 0; i < m.rows(); ++i) {
    rows[static_cast<size_t>(i)].resize(static_cast<size_t>(m.cols()));
    for (long j = 0; j < m.cols(); ++j) {
      rows[static_cast<size_t>(i)][static_cast<size_t>(j)] = m.at(i, j);
    }
  }
  return rows;
}

Simplex simplex_from_ids(const SimplicialComplex& X, const std::vector<std::string>& ids) {
  Simplex s;
  s.reserve(ids.size());
  for (const std::string& id : ids) s.push_back(X.vertex_index(id));
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<std::string> simplex_to_ids(const SimplicialComplex& X, const Simplex& s) {
  std::vector<std::string> ids;
  ids.reserve(s.size());
  for (Vertex v : s) ids.push_back(X.vertex_id(v));
  return ids;
}

py::dict homology_to_py(const std::vector<HomologyGroup>& groups) {
  py::list out;
  for (const HomologyGroup& h : groups) {
    py::dict g;
    g["rank"] = h.rank;
    g["torsion"] = h.torsion;
    out.append(g);
  }
  py::dict d;
  d["by_degree"] = out;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact group-ring arithmetic, resolutions, simplicial machinery, and "
            "combinatorial counting formulas for cyclic group actions";

  py::register_exception<zks::error>(m, "ZksError");

  py::class_<Ring>(m, "Ring")
      .def_static("integers", &Ring::integers)
      .def_static("integers_mod", &Ring::integers_mod, py::arg("m"))
      .def_static("parse", &Ring::parse, py::arg("text"))
      .def_property_readonly("modular", &Ring::modular)
      .def("name", &Ring::name)
      .def(py::self == py::self)
      .def("__repr__", [](const Ring& r) { return "Ring(" + r.name() + ")"; });

  py::enum_<Basis>(m, "Basis").value("T", Basis::T).value("Sigma", Basis::Sigma);

  py::class_<GroupRingElement>(m, "GroupRingElement")
      .def_static("zero", &GroupRingElement::zero, py::arg("k"), py::arg("ring"))
      .def_static("group", &GroupRingElement::group, py::arg("k"), py::arg("ring"), py::arg("a"))
      .def_static("identity", &GroupRingElement::identity, py::arg("k"), py::arg("ring"))
      .def_static("sigma_r", &GroupRingElement::sigma_r, py::arg("k"), py::arg("ring"),
                  py::arg("r"))
      .def_static("tau_r", &GroupRingElement::tau_r, py::arg("k"), py::arg("ring"), py::arg("r"))
      .def_static("sigma", &GroupRingElement::sigma, py::arg("k"), py::arg("ring"))
      .def_static("tau", &GroupRingElement::tau, py::arg("k"), py::arg("ring"))
      .def_static("from_coeffs", &GroupRingElement::from_coeffs, py::arg("k"), py::arg("ring"),
                  py::arg("coeffs"))
      .def_property_readonly("k", &GroupRingElement::k)
      .def_property_readonly("ring", &GroupRingElement::ring)
      .def_property_readonly("coeffs",
                             [](const GroupRingElement& x) { return x.coeffs(); })
      .def("is_zero", &GroupRingElement::is_zero)
      .def("evaluate", &GroupRingElement::evaluate, py::arg("j"))
      .def("augment", &GroupRingElement::augment)
      .def("coords", &GroupRingElement::coords, py::arg("basis"))
      .def_static("from_coords", &GroupRingElement::from_coords, py::arg("k"), py::arg("ring"),
                  py::arg("basis"), py::arg("coords"))
      .def("scaled", &GroupRingElement::scaled, py::arg("c"))
      .def("shifted", &GroupRingElement::shifted, py::arg("a"))
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__repr__", &GroupRingElement::str);

  py::class_<BarWord>(m, "BarWord")
      .def(py::init<int, std::vector<int>>(), py::arg("k"), py::arg("letters"))
      .def_readonly("k", &BarWord::k)
      .def_readonly("letters", &BarWord::letters)
      .def_property_readonly("degree", &BarWord::degree)
      .def("__repr__", &BarWord::str);

  py::class_<TensorElement>(m, "TensorElement")
      .def(py::init<int, std::vector<int>>(), py::arg("k"), py::arg("entries"))
      .def_readonly("k", &TensorElement::k)
      .def_readonly("entries", &TensorElement::entries)
      .def_property_readonly("degree", &TensorElement::degree)
      .def("shifted", &TensorElement::shifted, py::arg("power"))
      .def("__repr__", &TensorElement::str);

  m.def("tensor_to_bar", &tensor_to_bar, py::arg("tensor"));
  m.def("bar_to_tensor", &bar_to_tensor, py::arg("lead"), py::arg("word"));
  m.def("is_alternating", py::overload_cast<const BarWord&>(&is_alternating), py::arg("word"));
  m.def("is_alternating", py::overload_cast<const TensorElement&>(&is_alternating),
        py::arg("tensor"));
  m.def("is_strongly_alternating", py::overload_cast<const BarWord&>(&is_strongly_alternating),
        py::arg("word"));
  m.def("is_strongly_alternating",
        py::overload_cast<const TensorElement&>(&is_strongly_alternating), py::arg("tensor"));

  py::class_<StandardChain>(m, "StandardChain")
      .def(py::init<int, Ring, int>(), py::arg("k"), py::arg("ring"), py::arg("degree"))
      .def_property_readonly("k", &StandardChain::k)
      .def_property_readonly("degree", &StandardChain::degree)
      .def("add", &StandardChain::add, py::arg("word"), py::arg("coeff"))
      .def("add_tensor", &StandardChain::add_tensor, py::arg("tensor"), py::arg("scalar"))
      .def("coeff", &StandardChain::coeff, py::arg("word"))
      .def("is_zero", &StandardChain::is_zero)
      .def("terms",
           [](const StandardChain& c) {
             std::vector<std::pair<std::vector<int>, std::vector<Int>>> out;
             for (const auto& [w, coeff] : c.terms()) out.emplace_back(w, coeff.coeffs());
             return out;
           })
      .def("to_json", [](const StandardChain& c) { return io::standard_chain_to_json(c).dump(); })
      .def(py::self == py::self)
      .def("__repr__", &StandardChain::str);

  m.def("bar_boundary", &bar_boundary, py::arg("word"), py::arg("ring"));
  m.def("standard_boundary", &standard_boundary, py::arg("chain"));
  m.def("map_word_to_minimal", &map_word_to_minimal, py::arg("word"), py::arg("ring"));
  m.def(
      "map_to_minimal",
      [](const StandardChain& c) {
        MinimalElement e = map_to_minimal(c);
        return py::make_tuple(e.degree, e.value);
      },
      py::arg("chain"));
  m.def(
      "minimal_boundary",
      [](int degree, const GroupRingElement& value) {
        MinimalElement e = minimal_boundary({degree, value});
        return py::make_tuple(e.degree, e.value);
      },
      py::arg("degree"), py::arg("value"));
  m.def(
      "verify_chain_map",
      [](int k, int max_degree, const Ring& ring, long long cap) {
        ChainMapReport rep = verify_minimal_chain_map(k, max_degree, ring, cap);
        py::dict d;
        d["checked"] = rep.checked;
        d["failures"] = rep.failures.size();
        d["ok"] = rep.ok();
        return d;
      },
      py::arg("k"), py::arg("max_degree"), py::arg("ring") = Ring::integers(),
      py::arg("cap") = 1000000);

  py::class_<SimplicialComplex>(m, "SimplicialComplex")
      .def_static("from_facets", &SimplicialComplex::from_facets, py::arg("facets"))
      .def_property_readonly("vertex_ids", &SimplicialComplex::vertex_ids)
      .def_property_readonly("dimension", &SimplicialComplex::dimension)
      .def_property_readonly("pure", &SimplicialComplex::pure)
      .def("facets",
           [](const SimplicialComplex& X) {
             std::vector<std::vector<std::string>> out;
             for (const Simplex& f : X.facets()) out.push_back(simplex_to_ids(X, f));
             return out;
           })
      .def("faces",
           [](const SimplicialComplex& X, int dim) {
             std::vector<std::vector<std::string>> out;
             for (const Simplex& f : X.faces(dim)) out.push_back(simplex_to_ids(X, f));
             return out;
           },
           py::arg("dim"))
      .def("face_count", &SimplicialComplex::face_count)
      .def("__repr__", [](const SimplicialComplex& X) {
        return "SimplicialComplex(" + std::to_string(X.vertex_count()) + " vertices, " +
               std::to_string(X.facets().size()) + " facets)";
      });

  py::class_<GroupAction>(m, "GroupAction")
      .def_property_readonly("k", &GroupAction::k)
      .def("apply_vertex", &GroupAction::apply_vertex, py::arg("v"), py::arg("power"))
      .def("is_free",
           [](const GroupAction& a, const SimplicialComplex& X) { return a.check_free(X).free; },
           py::arg("complex"))
      .def("orbits", &GroupAction::orbits, py::arg("complex"));

  py::class_<SimplicialChain>(m, "SimplicialChain")
      .def(py::init<Ring, int>(), py::arg("ring"), py::arg("degree"))
      .def_property_readonly("degree", &SimplicialChain::degree)
      .def_property_readonly("ring", &SimplicialChain::ring)
      .def("is_zero", &SimplicialChain::is_zero)
      .def("coefficient_sum", &SimplicialChain::coefficient_sum)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self == py::self)
      .def("scaled", &SimplicialChain::scaled, py::arg("c"));

  m.def(
      "chain_from_terms",
      [](const SimplicialComplex& X, const Ring& ring, int degree,
         const std::vector<std::pair<std::vector<std::string>, Int>>& terms) {
        SimplicialChain x(ring, degree);
        for (const auto& [ids, coeff] : terms) x.add(simplex_from_ids(X, ids), coeff);
        require_supported(X, x);
        return x;
      },
      py::arg("complex"), py::arg("ring"), py::arg("degree"), py::arg("terms"));
  m.def(
      "chain_terms",
      [](const SimplicialComplex& X, const SimplicialChain& x) {
        std::vector<std::pair<std::vector<std::string>, Int>> out;
        for (const auto& [s, c] : x.terms()) out.emplace_back(simplex_to_ids(X, s), c);
        return out;
      },
      py::arg("complex"), py::arg("chain"));
  m.def("chain_boundary", &chain_boundary, py::arg("chain"));
  m.def("sigma_times", &sigma_times, py::arg("action"), py::arg("chain"));
  m.def("tau_times", &tau_times, py::arg("action"), py::arg("chain"));

  py::class_<ComplexWithAction>(m, "ComplexWithAction")
      .def_readonly("complex", &ComplexWithAction::complex)
      .def_readonly("action", &ComplexWithAction::action);

  m.def("join_complex", &join_complex, py::arg("k"), py::arg("m"),
        py::arg("facet_cap") = 200000);
  m.def("alt_subcomplex", &alt_subcomplex, py::arg("k"), py::arg("m"), py::arg("d"),
        py::arg("facet_cap") = 200000);
  m.def("count_jumps", &count_jumps, py::arg("signs"));
  m.def("join_chains", &join_chains, py::arg("complex"), py::arg("x"), py::arg("y"));

  m.def(
      "pseudomanifold_analysis",
      [](const SimplicialComplex& X) {
        PseudomanifoldReport rep = pseudomanifold_analysis(X);
        py::dict d;
        d["pure"] = rep.pure;
        d["pseudomanifold"] = rep.is_pseudomanifold;
        d["closed"] = rep.closed;
        d["orientable"] = rep.orientable;
        d["orientation_chain"] =
            rep.orientation_chain ? py::cast(*rep.orientation_chain) : py::none();
        d["boundary_complex"] =
            rep.boundary_complex ? py::cast(*rep.boundary_complex) : py::none();
        return d;
      },
      py::arg("complex"));

  py::class_<Subdivision>(m, "Subdivision")
      .def_property_readonly("complex", &Subdivision::complex)
      .def_property_readonly("action",
                             [](const Subdivision& sd) {
                               return sd.action() ? py::cast(*sd.action()) : py::none();
                             })
      .def("map_chain", &Subdivision::map_chain, py::arg("chain"));

  m.def(
      "barycentric_subdivision",
      [](const SimplicialComplex& X, const GroupAction* a) {
        return barycentric_subdivision(X, a);
      },
      py::arg("complex"), py::arg("action") = nullptr);

  py::class_<KGonSphere>(m, "KGonSphere")
      .def_readonly("complex", &KGonSphere::complex)
      .def_readonly("action", &KGonSphere::action)
      .def_readonly("u", &KGonSphere::u)
      .def_readonly("w", &KGonSphere::w);

  m.def("k_gon_join_sphere", &k_gon_join_sphere, py::arg("k"), py::arg("m"),
        py::arg("facet_cap") = 200000);

  py::class_<VertexLabel>(m, "VertexLabel")
      .def(py::init([](int sign, long long color) { return VertexLabel{sign, color}; }),
           py::arg("sign"), py::arg("color"))
      .def_readonly("sign", &VertexLabel::sign)
      .def_readonly("color", &VertexLabel::color);

  py::class_<Labelling>(m, "Labelling")
      .def_static("tautological", &Labelling::tautological, py::arg("complex"), py::arg("k"))
      .def_property_readonly("k", &Labelling::k)
      .def("at", &Labelling::at, py::arg("v"))
      .def("shifted", &Labelling::shifted, py::arg("j"));

  m.def(
      "labelling_from_dict",
      [](const SimplicialComplex& X, int k,
         const std::map<std::string, std::pair<int, long long>>& labels) {
        std::vector<VertexLabel> out(static_cast<size_t>(X.vertex_count()));
        std::vector<bool> seen(static_cast<size_t>(X.vertex_count()), false);
        for (const auto& [id, sc] : labels) {
          Vertex v = X.vertex_index(id);
          out[static_cast<size_t>(v)] = {sc.first, sc.second};
          seen[static_cast<size_t>(v)] = true;
        }
        for (Vertex v = 0; v < X.vertex_count(); ++v) {
          if (!seen[static_cast<size_t>(v)]) {
            throw format_error("labelling misses vertex '" + X.vertex_id(v) + "'");
          }
        }
        return Labelling(k, std::move(out));
      },
      py::arg("complex"), py::arg("k"), py::arg("labels"));

  m.def(
      "check_admissible",
      [](const SimplicialComplex& X, const Labelling& l) {
        auto rep = check_admissible(X, l);
        py::dict d;
        d["ok"] = rep.ok;
        std::vector<std::pair<std::string, std::string>> violations;
        for (auto [a, b] : rep.violations) violations.emplace_back(X.vertex_id(a), X.vertex_id(b));
        d["violations"] = violations;
        return d;
      },
      py::arg("complex"), py::arg("labelling"));
  m.def(
      "check_equivariant",
      [](const SimplicialComplex& X, const GroupAction& a, const Labelling& l) {
        auto rep = check_equivariant(X, a, l);
        py::dict d;
        d["ok"] = rep.ok;
        std::vector<std::string> violations;
        for (Vertex v : rep.violations) violations.push_back(X.vertex_id(v));
        d["violations"] = violations;
        return d;
      },
      py::arg("complex"), py::arg("action"), py::arg("labelling"));

  m.def("pattern_map", &pattern_map, py::arg("complex"), py::arg("chain"), py::arg("labelling"));

  py::enum_<LabellingMode>(m, "LabellingMode")
      .value("admissible", LabellingMode::admissible)
      .value("equivariant_admissible", LabellingMode::equivariant_admissible);

  m.def("random_labelling", &random_labelling, py::arg("complex"), py::arg("k"),
        py::arg("color_count"), py::arg("mode"), py::arg("seed"), py::arg("action") = nullptr,
        py::arg("max_rounds") = 500);

  py::class_<GeneralizedSphere>(m, "GeneralizedSphere")
      .def_readonly("complex", &GeneralizedSphere::complex)
      .def_readonly("action", &GeneralizedSphere::action)
      .def_readonly("ring", &GeneralizedSphere::ring)
      .def_readonly("chains", &GeneralizedSphere::chains)
      .def_property_readonly("top_degree", &GeneralizedSphere::top_degree);

  m.def("standard_join_sphere", &standard_join_sphere, py::arg("k"), py::arg("d"),
        py::arg("ring") = Ring::integers());
  m.def(
      "verify_sphere",
      [](const GeneralizedSphere& gs) {
        SphereCheck sc = verify_sphere(gs);
        py::dict d;
        d["ok"] = sc.ok;
        d["first_failure_degree"] = sc.first_failure_degree;
        return d;
      },
      py::arg("sphere"));
  m.def(
      "stokes_report",
      [](const SimplicialComplex& X, const SimplicialChain& x, const Labelling& l) {
        StokesReport rep = stokes_report(X, x, l);
        py::dict d;
        d["degree"] = rep.degree;
        d["lhs_count"] = rep.lhs_count;
        d["lhs_alg"] = rep.lhs_alg;
        d["rhs_alg"] = rep.rhs_alg;
        d["rhs_count"] = rep.rhs_count;
        d["equal"] = rep.equal;
        return d;
      },
      py::arg("complex"), py::arg("chain"), py::arg("labelling"));
  m.def(
      "tucker_invariants",
      [](const GeneralizedSphere& gs, const Labelling& l) {
        AlphaSequence a = tucker_invariants(gs, l);
        py::dict d;
        d["k"] = a.k;
        d["values"] = a.values;
        d["alpha0_direct"] = a.alpha0_direct;
        d["alpha0_matches"] = a.alpha0_matches;
        d["congruent"] = a.congruent;
        return d;
      },
      py::arg("sphere"), py::arg("labelling"));
  m.def("alpha_value", &alpha_value, py::arg("complex"), py::arg("chain"), py::arg("labelling"));
  m.def(
      "subdivided_tucker_counts",
      [](int k, int d, int rounds, const std::vector<std::uint64_t>& seeds, const Ring& ring,
         int color_count) {
        TuckerCountReport rep = subdivided_tucker_counts(k, d, rounds, seeds, ring, color_count);
        py::dict out;
        out["k"] = rep.k;
        out["d"] = rep.d;
        out["rounds"] = rep.rounds;
        out["counts"] = rep.counts;
        out["all_congruent_one"] = rep.all_congruent_one;
        return out;
      },
      py::arg("k"), py::arg("d"), py::arg("rounds"), py::arg("seeds"),
      py::arg("ring") = Ring::integers(), py::arg("color_count") = 0);
  m.def(
      "sphere_from_homology",
      [](const SimplicialComplex& X, const GroupAction& a, int r, const Ring& ring) {
        SphereBuildResult res = sphere_from_homology(X, a, r, ring);
        py::dict d;
        d["ok"] = res.ok();
        d["sphere"] = res.sphere ? py::cast(*res.sphere) : py::none();
        d["obstruction_degree"] = res.obstruction ? py::cast(res.obstruction->degree) : py::none();
        return d;
      },
      py::arg("complex"), py::arg("action"), py::arg("r"), py::arg("ring") = Ring::integers());
  m.def(
      "alternating_simplex_witness",
      [](const SimplicialComplex& X, const GroupAction& a, const Labelling& l, int r,
         const Ring& ring) {
        WitnessReport rep = alternating_simplex_witness(X, a, l, r, ring);
        py::dict d;
        d["found"] = rep.found;
        d["witness"] = rep.found ? py::cast(simplex_to_ids(X, rep.witness)) : py::none();
        d["hypothesis_failure"] = rep.hypothesis_failure;
        d["note"] = rep.note;
        d["alphas"] = rep.alphas;
        return d;
      },
      py::arg("complex"), py::arg("action"), py::arg("labelling"), py::arg("r"),
      py::arg("ring") = Ring::integers());
  m.def("orbit_labelling", &orbit_labelling, py::arg("complex"), py::arg("action"));
  m.def(
      "refute_equivariant_map",
      [](const SimplicialComplex& X, const GroupAction& ax, const SimplicialComplex& Y,
         const GroupAction& ay, const std::map<std::string, std::string>& phi, const Ring& ring) {
        std::vector<Vertex> map(static_cast<size_t>(X.vertex_count()), -1);
        for (const auto& [from, to] : phi) {
          map[static_cast<size_t>(X.vertex_index(from))] = Y.vertex_index(to);
        }
        for (Vertex v : map) {
          if (v < 0) throw format_error("vertex map must cover every vertex");
        }
        RefutationReport rep = refute_equivariant_map(X, ax, Y, ay, map, ring);
        py::dict d;
        d["stage"] = refutation_stage_name(rep.stage);
        d["rejected"] = rep.rejected();
        d["note"] = rep.note;
        d["alphas"] = rep.alphas;
        return d;
      },
      py::arg("source"), py::arg("source_action"), py::arg("target"), py::arg("target_action"),
      py::arg("phi"), py::arg("ring") = Ring::integers());
  m.def(
      "enumerate_equivariant_vertex_maps",
      [](const SimplicialComplex& X, const GroupAction& ax, const SimplicialComplex& Y,
         const GroupAction& ay) {
        std::vector<std::map<std::string, std::string>> out;
        for (const auto& phi : enumerate_equivariant_vertex_maps(X, ax, Y, ay)) {
          std::map<std::string, std::string> m2;
          for (Vertex v = 0; v < X.vertex_count(); ++v) {
            m2[X.vertex_id(v)] = Y.vertex_id(phi[static_cast<size_t>(v)]);
          }
          out.push_back(std::move(m2));
        }
        return out;
      },
      py::arg("source"), py::arg("source_action"), py::arg("target"), py::arg("target_action"));
  m.def(
      "alpha_invariance",
      [](const SimplicialComplex& X, const GroupAction& a, const SimplicialChain& x,
         const std::vector<Labelling>& ls) {
        InvarianceReport rep = alpha_invariance(X, a, x, ls);
        py::dict d;
        d["k"] = rep.k;
        d["alphas"] = rep.alphas;
        d["single_class"] = rep.single_class;
        return d;
      },
      py::arg("complex"), py::arg("action"), py::arg("chain"), py::arg("labellings"));

  m.def(
      "smith_normal_form",
      [](const std::vector<std::vector<Int>>& rows) {
        SmithDecomposition d = smith_normal_form(matrix_from_rows(rows));
        py::dict out;
        out["u"] = matrix_to_rows(d.u);
        out["s"] = matrix_to_rows(d.s);
        out["v"] = matrix_to_rows(d.v);
        out["diagonal"] = d.diagonal();
        out["rank"] = d.rank();
        return out;
      },
      py::arg("matrix"));
  m.def(
      "solve_linear",
      [](const std::vector<std::vector<Int>>& rows, const std::vector<Int>& b, const Ring& ring)
          -> py::object {
        auto x = solve_linear(matrix_from_rows(rows), b, ring);
        if (!x) return py::none();
        return py::cast(*x);
      },
      py::arg("matrix"), py::arg("b"), py::arg("ring") = Ring::integers());
  m.def("determinant",
        [](const std::vector<std::vector<Int>>& rows) { return determinant(matrix_from_rows(rows)); },
        py::arg("matrix"));
  m.def(
      "reduced_homology",
      [](const SimplicialComplex& X, const Ring& ring) {
        return homology_to_py(reduced_homology(X, ring));
      },
      py::arg("complex"), py::arg("ring") = Ring::integers());
  m.def(
      "homology_retract_check",
      [](int k, int m_, int d) {
        RetractReport rep = homology_retract_check(k, m_, d);
        py::dict out;
        out["match"] = rep.match;
        out["alt_side"] = homology_to_py(rep.alt_side);
        out["join_side"] = homology_to_py(rep.join_side);
        return out;
      },
      py::arg("k"), py::arg("m"), py::arg("d"));

  // JSON document bridging, matching the CLI file formats.
  m.def(
      "complex_to_json",
      [](const SimplicialComplex& X, const GroupAction* a) {
        return io::dump_document(io::complex_to_json(X, a));
      },
      py::arg("complex"), py::arg("action") = nullptr);
  m.def(
      "complex_from_json",
      [](const std::string& text) {
        io::ComplexDocument doc = io::complex_from_json(io::json::parse(text));
        return py::make_tuple(doc.complex, doc.action ? py::cast(*doc.action) : py::none());
      },
      py::arg("text"));
  m.def(
      "sphere_to_json",
      [](const GeneralizedSphere& gs) { return io::dump_document(io::sphere_to_json(gs)); },
      py::arg("sphere"));
  m.def(
      "sphere_from_json",
      [](const std::string& text) { return io::sphere_from_json(io::json::parse(text)); },
      py::arg("text"));
  m.def(
      "labelling_to_json",
      [](const SimplicialComplex& X, const Labelling& l) {
        return io::dump_document(io::labelling_to_json(X, l));
      },
      py::arg("complex"), py::arg("labelling"));
  m.def(
      "labelling_from_json",
      [](const SimplicialComplex& X, const std::string& text) {
        return io::labelling_from_json(X, io::json::parse(text));
      },
      py::arg("complex"), py::arg("text"));
  m.def(
      "chain_to_json",
      [](const SimplicialComplex& X, const SimplicialChain& x) {
        return io::dump_document(io::with_format(io::chain_to_json(X, x)));
      },
      py::arg("complex"), py::arg("chain"));
  m.def(
      "chain_from_json",
      [](const SimplicialComplex& X, const Ring& ring, const std::string& text) {
        return io::chain_from_json(X, ring, io::json::parse(text));
      },
      py::arg("complex"), py::arg("ring"), py::arg("text"));

  m.def("selftest", []() {
    auto results = selftest::run_all();
    py::list out;
    bool all_pass = true;
    for (const auto& r : results) {
      all_pass = all_pass && r.pass;
      py::dict d;
      d["number"] = r.number;
      d["name"] = r.name;
      d["pass"] = r.pass;
      d["detail"] = r.detail;
      out.append(d);
    }
    py::dict rep;
    rep["pass"] = all_pass;
    rep["criteria"] = out;
    return rep;
  });
}
