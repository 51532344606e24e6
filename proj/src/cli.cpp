#include "zks/cli.hpp"

#include <iostream>

#include "zks/io.hpp"
#include "zks/selftest.hpp"

namespace zks::cli {

namespace {

using io::json;

json report_base(const Invocation& inv) {
  json doc;
  doc["format"] = 1;
  doc["invocation"] = inv.argv;
  return doc;
}

void emit(const Invocation& inv, const json& doc, std::ostream& console) {
  if (!inv.out.empty()) {
    io::save_file(inv.out, doc);
  } else {
    console << io::dump_document(doc);
  }
}

std::vector<std::uint64_t> seed_list(const Invocation& inv) {
  if (!inv.seed_given) {
    throw format_error("randomized command needs an explicit --seed");
  }
  std::vector<std::uint64_t> seeds;
  for (int i = 0; i < inv.seeds; ++i) seeds.push_back(inv.seed + static_cast<std::uint64_t>(i));
  return seeds;
}

io::ComplexDocument load_complex(const std::string& path) {
  return io::complex_from_json(io::load_file(path));
}

const GroupAction& require_action(const io::ComplexDocument& doc, const std::string& path) {
  if (!doc.action) throw format_error("complex file '" + path + "' carries no action");
  return *doc.action;
}

int run_gen(const Invocation& inv, std::ostream& console) {
  Ring ring = Ring::parse(inv.ring);
  json doc;
  if (inv.kind == "join") {
    auto [X, action] = join_complex(inv.k, inv.m);
    doc = io::complex_to_json(X, &action);
  } else if (inv.kind == "alt") {
    auto [X, action] = alt_subcomplex(inv.k, inv.m, inv.d);
    doc = io::complex_to_json(X, &action);
  } else if (inv.kind == "kgon") {
    KGonSphere kg = k_gon_join_sphere(inv.k, inv.m);
    doc = io::complex_to_json(kg.complex, &kg.action);
  } else if (inv.kind == "ezk-sphere") {
    doc = io::sphere_to_json(standard_join_sphere(inv.k, inv.d, ring));
  } else if (inv.kind == "subdivide") {
    if (inv.in.empty()) throw format_error("gen subdivide needs --in");
    io::ComplexDocument cd = load_complex(inv.in);
    int rounds = inv.rounds > 0 ? inv.rounds : 1;
    for (int i = 0; i < rounds; ++i) {
      Subdivision sd = barycentric_subdivision(cd.complex, cd.action ? &*cd.action : nullptr);
      cd.complex = sd.complex();
      cd.action = sd.action();
    }
    doc = io::complex_to_json(cd.complex, cd.action ? &*cd.action : nullptr);
  } else {
    throw format_error("unknown gen kind '" + inv.kind + "'");
  }
  emit(inv, doc, console);
  return exit_pass;
}

int run_verify(const Invocation& inv, std::ostream& console) {
  Ring ring = Ring::parse(inv.ring);
  json doc = report_base(inv);
  bool pass = false;

  if (inv.kind == "chainmap") {
    ChainMapReport rep = verify_minimal_chain_map(inv.k, inv.max_degree, ring);
    pass = rep.ok();
    doc["values"] = {{"checked", rep.checked}, {"failures", rep.failures.size()}};
    if (!rep.failures.empty()) {
      json fs = json::array();
      for (const auto& f : rep.failures) {
        fs.push_back({{"word", f.word.letters},
                      {"via_minimal", io::element_to_json(f.via_minimal.value)},
                      {"via_standard", io::element_to_json(f.via_standard.value)}});
      }
      doc["certificate"] = fs;
    }
  } else if (inv.kind == "sphere") {
    if (inv.in.empty()) throw format_error("verify sphere needs --in");
    GeneralizedSphere gs = io::sphere_from_json(io::load_file(inv.in));
    SphereCheck sc = verify_sphere(gs);
    pass = sc.ok;
    doc["values"] = {{"degrees", gs.chains.size()}, {"first_failure", sc.first_failure_degree}};
  } else if (inv.kind == "admissible" || inv.kind == "equivariant") {
    if (inv.in.empty() || inv.labelling.empty()) {
      throw format_error("verify " + inv.kind + " needs --in and --labelling");
    }
    io::ComplexDocument cd = load_complex(inv.in);
    Labelling l = io::labelling_from_json(cd.complex, io::load_file(inv.labelling));
    if (inv.kind == "admissible") {
      auto rep = check_admissible(cd.complex, l);
      pass = rep.ok;
      json violations = json::array();
      for (auto [a, b] : rep.violations) {
        violations.push_back({cd.complex.vertex_id(a), cd.complex.vertex_id(b)});
      }
      doc["values"] = {{"violations", violations}};
    } else {
      auto rep = check_equivariant(cd.complex, require_action(cd, inv.in), l);
      pass = rep.ok;
      json violations = json::array();
      for (Vertex v : rep.violations) violations.push_back(cd.complex.vertex_id(v));
      doc["values"] = {{"violations", violations}};
    }
  } else if (inv.kind == "pm") {
    if (inv.in.empty()) throw format_error("verify pm needs --in");
    io::ComplexDocument cd = load_complex(inv.in);
    PseudomanifoldReport rep = pseudomanifold_analysis(cd.complex);
    pass = rep.is_pseudomanifold;
    doc["values"] = {{"pure", rep.pure},
                     {"pseudomanifold", rep.is_pseudomanifold},
                     {"closed", rep.closed},
                     {"orientable", rep.orientable}};
    if (rep.orientation_chain) {
      doc["certificate"] = {{"orientation_chain",
                             io::chain_to_json(cd.complex, *rep.orientation_chain)}};
    }
  } else {
    throw format_error("unknown verify kind '" + inv.kind + "'");
  }

  doc["verdict"] = pass ? "pass" : "fail";
  emit(inv, doc, console);
  return pass ? exit_pass : exit_fail;
}

int run_theorem(const Invocation& inv, std::ostream& console) {
  Ring ring = Ring::parse(inv.ring);
  json doc = report_base(inv);
  doc["theorem"] = inv.kind;
  bool pass = false;

  if (inv.kind == "stokes") {
    if (inv.chain.empty() || inv.labelling.empty()) {
      throw format_error("theorem stokes needs --chain and --labelling");
    }
    json jchain = io::load_file(inv.chain);
    io::ComplexDocument cd;
    if (!inv.complex.empty()) {
      cd = load_complex(inv.complex);
    } else if (jchain.contains("complex")) {
      cd = io::complex_from_json(jchain.at("complex"));
    } else {
      throw format_error("theorem stokes needs --complex or an embedded complex");
    }
    if (jchain.contains("ring")) ring = Ring::parse(jchain.at("ring").get<std::string>());
    SimplicialChain x = io::chain_from_json(cd.complex, ring, jchain);
    Labelling l = io::labelling_from_json(cd.complex, io::load_file(inv.labelling));
    StokesReport rep = stokes_report(cd.complex, x, l);
    pass = rep.equal;
    doc["values"] = {{"degree", rep.degree},
                     {"ring", rep.ring.name()},
                     {"lhs_count", io::int_to_json(rep.lhs_count)},
                     {"lhs_alg", io::int_to_json(rep.lhs_alg)},
                     {"rhs_alg", io::int_to_json(rep.rhs_alg)},
                     {"rhs_count", io::int_to_json(rep.rhs_count)}};
  } else if (inv.kind == "tucker") {
    TuckerCountReport rep = subdivided_tucker_counts(inv.k, inv.d, inv.rounds, seed_list(inv), ring);
    pass = rep.all_congruent_one;
    json counts = json::array();
    for (const Int& c : rep.counts) counts.push_back(io::int_to_json(c));
    doc["values"] = {{"k", rep.k}, {"d", rep.d}, {"rounds", rep.rounds}, {"counts", counts}};
  } else if (inv.kind == "invariance") {
    GeneralizedSphere gs = standard_join_sphere(inv.k, inv.d, ring);
    std::vector<Labelling> ls;
    for (std::uint64_t s : seed_list(inv)) {
      ls.push_back(random_labelling(gs.complex, inv.k, gs.complex.dimension() + 3,
                                    LabellingMode::equivariant_admissible, s, &gs.action));
    }
    InvarianceReport rep = alpha_invariance(gs.complex, gs.action, gs.chains.back(), ls);
    pass = rep.single_class;
    json alphas = json::array();
    for (const Int& a : rep.alphas) alphas.push_back(io::int_to_json(a));
    doc["values"] = {{"alphas", alphas}, {"single_class", rep.single_class}};
  } else if (inv.kind == "dold") {
    auto [X, ax] = join_complex(inv.k, inv.m);
    auto [Y, ay] = join_complex(inv.k, inv.d + 1);
    auto candidates = enumerate_equivariant_vertex_maps(X, ax, Y, ay);
    long long rejected = 0;
    json stages;
    for (const auto& phi : candidates) {
      RefutationReport rep = refute_equivariant_map(X, ax, Y, ay, phi, ring);
      if (rep.rejected()) ++rejected;
      std::string stage = refutation_stage_name(rep.stage);
      stages[stage] = (stages.contains(stage) ? stages[stage].get<long long>() : 0ll) + 1;
    }
    pass = rejected == static_cast<long long>(candidates.size());
    doc["values"] = {{"candidates", candidates.size()}, {"rejected", rejected}, {"stages", stages}};
  } else if (inv.kind == "retract") {
    RetractReport rep = homology_retract_check(inv.k, inv.m, inv.d);
    pass = rep.match;
    doc["values"] = {{"alt_side", io::homology_to_json(rep.alt_side)},
                     {"join_side", io::homology_to_json(rep.join_side)}};
  } else {
    throw format_error("unknown theorem kind '" + inv.kind + "'");
  }

  doc["verdict"] = pass ? "pass" : "fail";
  emit(inv, doc, console);
  return pass ? exit_pass : exit_fail;
}

int run_homology(const Invocation& inv, std::ostream& console) {
  if (inv.in.empty()) throw format_error("homology needs --in");
  Ring ring = Ring::parse(inv.ring);
  io::ComplexDocument cd = load_complex(inv.in);
  json doc = report_base(inv);
  doc["values"] = {{"ring", ring.name()},
                   {"reduced_homology", io::homology_to_json(reduced_homology(cd.complex, ring))}};
  doc["verdict"] = "pass";
  emit(inv, doc, console);
  return exit_pass;
}

int run_selftest(const Invocation& inv, std::ostream& console) {
  auto results = selftest::run_all();
  bool all_pass = true;
  json criteria = json::array();
  for (const auto& r : results) {
    all_pass = all_pass && r.pass;
    console << (r.pass ? "[PASS] " : "[FAIL] ") << r.number << " " << r.name << ": " << r.detail
            << "\n";
    criteria.push_back({{"number", r.number}, {"name", r.name}, {"pass", r.pass},
                        {"detail", r.detail}});
  }
  json doc = report_base(inv);
  doc["values"] = {{"criteria", criteria}};
  doc["verdict"] = all_pass ? "pass" : "fail";
  if (!inv.out.empty()) io::save_file(inv.out, doc);
  return all_pass ? exit_pass : exit_fail;
}

}  // namespace

int run(const Invocation& inv, std::ostream& console) {
  if (inv.command == "gen") return run_gen(inv, console);
  if (inv.command == "verify") return run_verify(inv, console);
  if (inv.command == "theorem") return run_theorem(inv, console);
  if (inv.command == "homology") return run_homology(inv, console);
  if (inv.command == "selftest") return run_selftest(inv, console);
  throw format_error("unknown command '" + inv.command + "'");
}

int exit_code_for_current_exception() {
  try {
    throw;
  } catch (const format_error&) {
    return exit_usage;
  } catch (const domain_error&) {
    return exit_usage;
  } catch (const dimension_error&) {
    return exit_usage;
  } catch (const size_error&) {
    return exit_usage;
  } catch (const error&) {
    return exit_fail;
  }
}

}  // namespace zks::cli
