#include <CLI11.hpp>

#include <iostream>

#include "zks/cli.hpp"
#include "zks/errors.hpp"

namespace {

void add_common_flags(CLI::App* cmd, zks::cli::Invocation& inv) {
  cmd->add_option("--k", inv.k, "group order");
  cmd->add_option("--m", inv.m, "number of join copies");
  cmd->add_option("--d", inv.d, "degree / jump bound");
  cmd->add_option("--ring", inv.ring, "coefficient ring: Z or Zmod:<m>");
  cmd->add_option("--seed", inv.seed, "base seed for randomized runs");
  cmd->add_option("--seeds", inv.seeds, "number of seeded runs");
  cmd->add_option("--max-degree", inv.max_degree, "maximal bar-word degree");
  cmd->add_option("--rounds", inv.rounds, "barycentric subdivision rounds");
  cmd->add_option("--in", inv.in, "input file");
  cmd->add_option("--out", inv.out, "output file (default: stdout)");
  cmd->add_option("--complex", inv.complex, "complex file");
  cmd->add_option("--chain", inv.chain, "chain file");
  cmd->add_option("--labelling", inv.labelling, "labelling file");
}

}  // namespace

int main(int argc, char** argv) {
  zks::cli::Invocation inv;
  for (int i = 0; i < argc; ++i) inv.argv.emplace_back(argv[i]);

  CLI::App app{"Exact combinatorial Stokes counting, Tucker lemmas, and integer homology "
               "for cyclic group actions"};
  app.require_subcommand(1);

  CLI::App* gen = app.add_subcommand("gen", "generate complexes, spheres, and subdivisions");
  gen->add_option("kind", inv.kind, "join | alt | kgon | ezk-sphere | subdivide")->required();
  add_common_flags(gen, inv);

  CLI::App* verify = app.add_subcommand("verify", "run exact verifiers");
  verify->add_option("kind", inv.kind, "chainmap | sphere | admissible | equivariant | pm")
      ->required();
  add_common_flags(verify, inv);

  CLI::App* theorem = app.add_subcommand("theorem", "evaluate the counting statements");
  theorem->add_option("kind", inv.kind, "stokes | tucker | invariance | dold | retract")
      ->required();
  add_common_flags(theorem, inv);

  CLI::App* homology = app.add_subcommand("homology", "reduced homology of a complex file");
  add_common_flags(homology, inv);

  CLI::App* selftest = app.add_subcommand("selftest", "run the full verification suite");
  add_common_flags(selftest, inv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? zks::cli::exit_pass : zks::cli::exit_usage;
  }

  for (CLI::App* cmd : {gen, verify, theorem, homology, selftest}) {
    if (cmd->parsed()) {
      inv.command = cmd->get_name();
      inv.seed_given = cmd->count("--seed") > 0;
    }
  }

  try {
    return zks::cli::run(inv, std::cout);
  } catch (const zks::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return zks::cli::exit_code_for_current_exception();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return zks::cli::exit_fail;
  }
}
