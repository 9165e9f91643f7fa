// Acceptance gate: one line per criterion, nonzero exit on any failure.

#include <cstdio>

#include "hypertutte/selftest.hpp"

int main() {
  bool all = true;
  for (const auto& r : hypertutte::run_acceptance()) {
    std::printf("criterion %2d %-26s %s%s%s\n", r.number, r.name.c_str(),
                r.pass ? "PASS" : "FAIL", r.detail.empty() ? "" : " - ",
                r.detail.c_str());
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
