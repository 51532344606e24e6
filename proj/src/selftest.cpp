#include "zks/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "zks/homalg.hpp"
#include "zks/labelling.hpp"
#include "zks/resolutions.hpp"
#include "zks/ring.hpp"
#include "zks/simplicial.hpp"
#include "zks/stokes.hpp"

namespace zks::selftest {

namespace {

struct Check {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "FAILED: " << what << "; ";
    }
  }
};

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  int below(int n) { return static_cast<int>(gen() % static_cast<std::uint64_t>(n)); }
  Int int_between(int lo, int hi) { return Int(lo + below(hi - lo + 1)); }
};

GroupRingElement random_element(Rng& rng, int k, const Ring& ring) {
  std::vector<Int> coeffs(static_cast<size_t>(k));
  for (Int& c : coeffs) c = rng.int_between(-9, 9);
  return GroupRingElement::from_coeffs(k, ring, std::move(coeffs));
}

Ring random_ring(Rng& rng) {
  int pick = rng.below(3);
  if (pick == 0) return Ring::integers();
  return Ring::integers_mod(Int(2 + rng.below(9)));
}

// Criterion 1: the chain map to the minimal resolution commutes with the
// boundaries, exhaustively over all bar words of degree <= 4.
CriterionResult criterion_chain_map() {
  Check c;
  long long checked = 0;
  for (int k = 2; k <= 6; ++k) {
    ChainMapReport rep = verify_minimal_chain_map(k, 4, Ring::integers());
    checked += rep.checked;
    c.require(rep.ok(), "chain map failures at k=" + std::to_string(k));
  }
  c.detail << "checked " << checked << " bar words, k=2..6, degree<=4";
  return {1, "chain map to minimal resolution", c.pass, c.detail.str(), 0.0, 5.0};
}

// Criterion 2: all four sides of the counting identity agree on random
// admissible labellings of three fixture families.
CriterionResult criterion_stokes() {
  Check c;
  long long reports = 0;
  Ring z = Ring::integers();
  for (int k = 2; k <= 4; ++k) {
    // (a) single r-simplices
    for (int r = 1; r <= 3; ++r) {
      std::vector<std::string> ids;
      for (int i = 0; i <= r; ++i) ids.push_back("v" + std::to_string(i));
      Simplex top(static_cast<size_t>(r + 1));
      for (int i = 0; i <= r; ++i) top[static_cast<size_t>(i)] = i;
      SimplicialComplex X = SimplicialComplex::from_indexed(ids, {top});
      SimplicialChain x(z, r);
      x.add(top, 1);
      for (int seed = 0; seed < 100; ++seed) {
        Labelling l = random_labelling(X, k, r + 3, LabellingMode::admissible,
                                       90000u + static_cast<unsigned>(100 * k + seed));
        StokesReport rep = stokes_report(X, x, l);
        ++reports;
        c.require(rep.equal, "single-simplex sides differ (k=" + std::to_string(k) +
                                 ", r=" + std::to_string(r) + ", seed=" + std::to_string(seed) + ")");
      }
    }
    // (b) a chain on the jump-bounded join subcomplex
    {
      auto [X, action] = alt_subcomplex(k, 4, 2);
      (void)action;
      Rng rng(777u + static_cast<unsigned>(k));
      SimplicialChain x(z, X.dimension());
      for (const Simplex& f : X.facets()) x.add(f, rng.int_between(-2, 2));
      for (int seed = 0; seed < 100; ++seed) {
        Labelling l = random_labelling(X, k, 6, LabellingMode::admissible,
                                       91000u + static_cast<unsigned>(100 * k + seed));
        StokesReport rep = stokes_report(X, x, l);
        ++reports;
        c.require(rep.equal, "alt-subcomplex sides differ (k=" + std::to_string(k) + ")");
      }
    }
    // (c) the octahedral 2-sphere orientation cycle
    {
      auto [X, action] = join_complex(2, 3);
      (void)action;
      auto pm = pseudomanifold_analysis(X);
      c.require(pm.is_pseudomanifold && pm.orientable && pm.closed, "octahedron analysis");
      SimplicialChain x = *pm.orientation_chain;
      for (int seed = 0; seed < 100; ++seed) {
        Labelling l = random_labelling(X, k, 6, LabellingMode::admissible,
                                       92000u + static_cast<unsigned>(100 * k + seed));
        StokesReport rep = stokes_report(X, x, l);
        ++reports;
        c.require(rep.equal, "octahedron sides differ (k=" + std::to_string(k) + ")");
        c.require(rep.lhs_alg == 0, "closed-cycle boundary side must vanish");
      }
    }
  }
  c.detail << reports << " reports, all four sides equal";
  return {2, "counting identity, both evaluations", c.pass, c.detail.str(), 0.0, 30.0};
}

// Independent counter for the classical k=2 statement: facets whose
// color-sorted signs alternate starting with +.
long long count_plus_alternating(const SimplicialComplex& X, const Labelling& l) {
  long long count = 0;
  for (const Simplex& f : X.facets()) {
    std::vector<std::pair<long long, int>> by_color;
    for (Vertex v : f) by_color.emplace_back(l.at(v).color, l.at(v).sign);
    std::sort(by_color.begin(), by_color.end());
    bool ok = true;
    for (size_t i = 0; i < by_color.size() && ok; ++i) {
      if (i > 0 && by_color[i].first == by_color[i - 1].first) ok = false;
      if (by_color[i].second != static_cast<int>(i % 2)) ok = false;
    }
    if (ok) ++count;
  }
  return count;
}

// Criterion 3: on the hyperoctahedral d-sphere every antipodal admissible
// labelling has an odd number of +alternating facets.
CriterionResult criterion_fan_tucker() {
  Check c;
  Ring z2 = Ring::integers_mod(2);
  for (int d = 1; d <= 3; ++d) {
    GeneralizedSphere gs = standard_join_sphere(2, d, z2);
    for (int seed = 0; seed < 50; ++seed) {
      Labelling l = random_labelling(gs.complex, 2, d + 3, LabellingMode::equivariant_admissible,
                                     93000u + static_cast<unsigned>(100 * d + seed), &gs.action);
      long long direct = count_plus_alternating(gs.complex, l);
      c.require(direct % 2 == 1, "even +alternating count (d=" + std::to_string(d) +
                                     ", seed=" + std::to_string(seed) + ")");
      AlphaSequence alphas = tucker_invariants(gs, l);
      c.require(alphas.values.back() == Int(direct % 2),
                "machinery parity disagrees with the direct count");
    }
  }
  c.detail << "3 sphere dimensions x 50 antipodal labellings, all counts odd";
  return {3, "classical +alternating parity", c.pass, c.detail.str(), 0.0, 10.0};
}

// Criterion 4: sphere verification, alpha congruences, and the once
// subdivided counts.
CriterionResult criterion_tucker() {
  Check c;
  Ring z = Ring::integers();
  for (int k = 2; k <= 4; ++k) {
    for (int d = 0; d <= 3; ++d) {
      GeneralizedSphere gs = standard_join_sphere(k, d, z);
      SphereCheck sc = verify_sphere(gs);
      c.require(sc.ok, "sphere verification (k=" + std::to_string(k) + ", d=" + std::to_string(d) + ")");
      for (int seed = 0; seed < 25; ++seed) {
        Labelling l = random_labelling(gs.complex, k, d + 4,
                                       LabellingMode::equivariant_admissible,
                                       94000u + static_cast<unsigned>(1000 * k + 100 * d + seed),
                                       &gs.action);
        AlphaSequence alphas = tucker_invariants(gs, l);
        c.require(alphas.values[0] == 1, "alpha_0 != 1");
        c.require(alphas.alpha0_matches, "alpha_0 mismatch with coefficient sum");
        c.require(alphas.congruent, "alpha_i not congruent (k=" + std::to_string(k) +
                                        ", d=" + std::to_string(d) + ")");
        for (const Int& v : alphas.values) {
          c.require(congruent_mod(v, Int(1), k, z), "alpha_i not congruent to 1");
        }
      }
    }
  }
  std::vector<std::uint64_t> seeds;
  for (std::uint64_t s = 0; s < 10; ++s) seeds.push_back(95000u + s);
  for (int k = 2; k <= 3; ++k) {
    for (int d = 0; d <= 1; ++d) {
      TuckerCountReport rep = subdivided_tucker_counts(k, d, 1, seeds, z);
      c.require(rep.all_congruent_one, "subdivided count not 1 mod k (k=" + std::to_string(k) +
                                           ", d=" + std::to_string(d) + ")");
    }
  }
  c.detail << "spheres k=2..4 d<=3 verified; 25 labellings each; subdivided counts = 1 mod k";
  return {4, "generalized Tucker counts", c.pass, c.detail.str(), 0.0, 60.0};
}

// Criterion 5: the congruence class of alpha does not depend on the
// labelling.
CriterionResult criterion_invariance() {
  Check c;
  Ring z = Ring::integers();
  for (int k = 2; k <= 3; ++k) {
    GeneralizedSphere gs = standard_join_sphere(k, 2, z);
    std::vector<Labelling> ls;
    for (int seed = 0; seed < 20; ++seed) {
      ls.push_back(random_labelling(gs.complex, k, 4 + seed % 3,
                                    LabellingMode::equivariant_admissible,
                                    96000u + static_cast<unsigned>(100 * k + seed), &gs.action));
    }
    InvarianceReport rep = alpha_invariance(gs.complex, gs.action, gs.chains[2], ls);
    c.require(rep.single_class, "alpha classes differ across labellings (k=" + std::to_string(k) + ")");
    c.require(congruent_mod(rep.alphas.front(), Int(1), k, z), "alpha class is not 1 mod k");
  }
  c.detail << "20 labellings per k in {2,3}, single congruence class";
  return {5, "labelling invariance of alpha", c.pass, c.detail.str(), 0.0, 10.0};
}

// Criterion 6: homological sphere construction and the exhaustive rejection
// of equivariant maps from the octahedron to the square.
CriterionResult criterion_dold() {
  Check c;
  Ring z = Ring::integers();
  for (int k = 2; k <= 3; ++k) {
    for (int r = 0; r <= 2; ++r) {
      auto [X, action] = join_complex(k, r + 2);
      SphereBuildResult built = sphere_from_homology(X, action, r, z);
      c.require(built.ok(), "sphere build failed (k=" + std::to_string(k) +
                                ", r=" + std::to_string(r) + ")");
      if (built.ok()) {
        c.require(verify_sphere(*built.sphere).ok, "built sphere fails verification");
      }
    }
  }
  auto [X, ax] = join_complex(2, 3);
  auto [Y, ay] = join_complex(2, 2);
  auto candidates = enumerate_equivariant_vertex_maps(X, ax, Y, ay);
  c.require(candidates.size() == 64, "expected 4^3 candidate maps");
  long long rejected = 0;
  for (const auto& phi : candidates) {
    RefutationReport rep = refute_equivariant_map(X, ax, Y, ay, phi, z);
    if (rep.rejected()) ++rejected;
  }
  c.require(rejected == static_cast<long long>(candidates.size()),
            "an equivariant candidate map survived");
  c.detail << "spheres built for k<=3, r<=2; " << rejected << "/64 candidate maps rejected";
  return {6, "homological spheres and map refutation", c.pass, c.detail.str(), 0.0, 60.0};
}

// Criterion 7: the jump-bounded subcomplexes have the homology of the small
// join, and the join of k points has the expected wedge homology.
CriterionResult criterion_retract() {
  Check c;
  const int tuples[][3] = {{2, 1, 3}, {2, 1, 4}, {2, 2, 4}, {3, 0, 3}, {3, 1, 3}};
  for (auto [k, d, m] : tuples) {
    RetractReport rep = homology_retract_check(k, m, d);
    c.require(rep.match, "homology mismatch (k=" + std::to_string(k) + ", d=" + std::to_string(d) +
                             ", m=" + std::to_string(m) + ")");
  }
  Ring z = Ring::integers();
  for (int k = 2; k <= 3; ++k) {
    for (int d = 0; d <= 2; ++d) {
      auto groups = reduced_homology(join_complex(k, d + 1).complex, z);
      long long expected = 1;
      for (int i = 0; i <= d; ++i) expected *= (k - 1);
      for (int i = 0; i < static_cast<int>(groups.size()); ++i) {
        const HomologyGroup& h = groups[static_cast<size_t>(i)];
        if (i == d) {
          c.require(h.rank == expected && h.torsion.empty(),
                    "top homology wrong (k=" + std::to_string(k) + ", d=" + std::to_string(d) + ")");
        } else {
          c.require(h.trivial(), "extra homology in degree " + std::to_string(i));
        }
      }
    }
  }
  c.detail << "5 retract tuples matched; join homology free of rank (k-1)^(d+1) in degree d";
  return {7, "retract homology", c.pass, c.detail.str(), 0.0, 60.0};
}

// Criterion 8: randomized identities of the algebra substrate.
CriterionResult criterion_substrate() {
  Check c;
  Rng rng(0xa11ce5eedULL);
  const int trials = 1000;

  for (int t = 0; t < trials && c.pass; ++t) {
    int k = 2 + rng.below(5);
    Ring ring = random_ring(rng);
    GroupRingElement sigma = GroupRingElement::sigma(k, ring);
    GroupRingElement tau = GroupRingElement::tau(k, ring);
    int i = 1 + rng.below(k);
    c.require((sigma * tau).is_zero(), "sigma tau != 0");
    c.require(tau * GroupRingElement::sigma_r(k, ring, i) == GroupRingElement::tau_r(k, ring, i),
              "tau sigma_i != tau_i");
    c.require(sigma * sigma == sigma.scaled(Int(k)), "sigma^2 != k sigma");
  }

  for (int t = 0; t < trials && c.pass; ++t) {
    int k = 2 + rng.below(5);
    Ring ring = random_ring(rng);
    GroupRingElement x = random_element(rng, k, ring);
    for (Basis basis : {Basis::T, Basis::Sigma}) {
      c.require(GroupRingElement::from_coords(k, ring, basis, x.coords(basis)) == x,
                "basis round trip failed");
    }
  }

  for (int t = 0; t < trials && c.pass; ++t) {
    int k = 2 + rng.below(4);
    Ring ring = random_ring(rng);
    int r = 2 + rng.below(3);
    std::vector<int> letters(static_cast<size_t>(r));
    for (int& a : letters) a = rng.below(k);
    StandardChain unit(k, ring, r);
    unit.add(BarWord(k, letters), GroupRingElement::identity(k, ring));
    c.require(standard_boundary(standard_boundary(unit)).is_zero(), "bar dd != 0");
    MinimalElement m{2 + rng.below(4), random_element(rng, k, ring)};
    c.require(minimal_boundary(minimal_boundary(m)).value.is_zero(), "minimal dd != 0");
  }

  for (int t = 0; t < trials && c.pass; ++t) {
    int k = 2 + rng.below(2);
    Ring ring = random_ring(rng);
    auto [X, action] = join_complex(k, 3);
    (void)action;
    SimplicialChain x(ring, 2);
    for (const Simplex& f : X.facets()) x.add(f, rng.int_between(-3, 3));
    c.require(chain_boundary(chain_boundary(x)).is_zero(), "simplicial dd != 0");
  }

  for (int t = 0; t < trials && c.pass; ++t) {
    int k = 2 + rng.below(2);
    Ring ring = random_ring(rng);
    auto [X, action] = join_complex(k, 4);
    (void)action;
    auto random_edge_chain = [&](int copy_a, int copy_b) {
      SimplicialChain x(ring, 1);
      for (int t2 = 0; t2 < 3; ++t2) {
        Vertex a = X.vertex_index(join_vertex_id(rng.below(k), copy_a));
        Vertex b = X.vertex_index(join_vertex_id(rng.below(k), copy_b));
        x.add({std::min(a, b), std::max(a, b)}, rng.int_between(-2, 2));
      }
      return x;
    };
    SimplicialChain x = random_edge_chain(1, 2);
    SimplicialChain y = random_edge_chain(3, 4);
    SimplicialChain lhs = chain_boundary(join_chains(X, x, y));
    SimplicialChain rhs = join_chains(X, chain_boundary(x), y) +
                          join_chains(X, x, chain_boundary(y));  // (-1)^{deg x + 1} = +1
    c.require(lhs == rhs, "join Leibniz rule failed");
  }

  for (int t = 0; t < trials && c.pass; ++t) {
    long rows = 1 + rng.below(5);
    long cols = 1 + rng.below(5);
    IntegerMatrix a(rows, cols);
    for (long i = 0; i < rows; ++i) {
      for (long j = 0; j < cols; ++j) a.at(i, j) = rng.int_between(-9, 9);
    }
    SmithDecomposition d = smith_normal_form(a);
    c.require(d.u * a * d.v == d.s, "UAV != S");
    Int du = determinant(d.u), dv = determinant(d.v);
    c.require((du == 1 || du == -1) && (dv == 1 || dv == -1), "U or V not unimodular");
    auto diag = d.diagonal();
    for (size_t i = 0; i + 1 < diag.size(); ++i) {
      c.require(diag[i] >= 0, "negative diagonal entry");
      if (diag[i] != 0) c.require(diag[i + 1] % diag[i] == 0, "divisibility chain broken");
      else c.require(diag[i + 1] == 0, "zero before nonzero on the diagonal");
    }
    for (long i = 0; i < d.s.rows(); ++i) {
      for (long j = 0; j < d.s.cols(); ++j) {
        if (i != j) c.require(d.s.at(i, j) == 0, "S not diagonal");
      }
    }
  }

  c.detail << trials << " randomized trials per identity family";
  return {8, "algebra substrate identities", c.pass, c.detail.str(), 0.0, 10.0};
}

CriterionResult timed(CriterionResult (*fn)(), int number, const char* name,
                      double limit_seconds) {
  auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = fn();
  } catch (const std::exception& e) {
    r = {number, name, false, std::string("exception: ") + e.what(), 0.0, limit_seconds};
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

std::vector<CriterionResult> run_all() {
  return {
      timed(criterion_chain_map, 1, "chain map to minimal resolution", 5.0),
      timed(criterion_stokes, 2, "counting identity, both evaluations", 30.0),
      timed(criterion_fan_tucker, 3, "classical +alternating parity", 10.0),
      timed(criterion_tucker, 4, "generalized Tucker counts", 60.0),
      timed(criterion_invariance, 5, "labelling invariance of alpha", 10.0),
      timed(criterion_dold, 6, "homological spheres and map refutation", 60.0),
      timed(criterion_retract, 7, "retract homology", 60.0),
      timed(criterion_substrate, 8, "algebra substrate identities", 10.0),
  };
}

}  // namespace zks::selftest
