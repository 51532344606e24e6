#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace zks::cli {

// Exit codes: 0 pass, 1 mathematical failure, 2 usage or format error.
inline constexpr int exit_pass = 0;
inline constexpr int exit_fail = 1;
inline constexpr int exit_usage = 2;

struct Invocation {
  std::vector<std::string> argv;  // echoed into reports
  std::string command;            // gen | verify | theorem | homology | selftest
  std::string kind;
  int k = 2;
  int m = 1;
  int d = 0;
  int max_degree = 4;
  int rounds = 0;
  int seeds = 1;
  std::uint64_t seed = 0;
  bool seed_given = false;  // randomized commands demand an explicit seed
  std::string ring = "Z";
  std::string in;
  std::string out;
  std::string chain;
  std::string labelling;
  std::string complex;
};

// Runs one parsed invocation; reports go to `console` unless --out is set.
// Throws zks errors for usage/format problems; returns the exit code.
int run(const Invocation& inv, std::ostream& console);

// Maps a thrown library error to an exit code (usage/format -> 2, else 1).
int exit_code_for_current_exception();

}  // namespace zks::cli
