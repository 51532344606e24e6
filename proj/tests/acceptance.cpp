// Integration suite: runs every verification criterion at its default size
// and enforces the per-criterion time budget. One line per criterion.

#include <cstdio>

#include "zks/selftest.hpp"

int main() {
  auto results = zks::selftest::run_all();
  bool all_pass = true;
  for (const auto& r : results) {
    bool in_budget = r.seconds < r.limit_seconds;
    bool ok = r.pass && in_budget;
    all_pass = all_pass && ok;
    std::printf("[%s] criterion %d: %s (%.2fs, limit %.0fs) %s\n", ok ? "PASS" : "FAIL",
                r.number, r.name.c_str(), r.seconds, r.limit_seconds,
                r.pass ? (in_budget ? "" : "-- over time budget") : r.detail.c_str());
    if (r.pass) std::printf("        %s\n", r.detail.c_str());
  }
  std::printf("%s: %zu criteria\n", all_pass ? "ALL PASS" : "FAILURES", results.size());
  return all_pass ? 0 : 1;
}
