// Runs every acceptance criterion and prints one line per criterion.

#include <cstdio>

#include "cpindex/selftest.hpp"

int main() {
  int failed = 0;
  for (const auto& c : cpindex::selftest::criteria()) {
    const auto r = cpindex::selftest::run_criterion(c);
    std::printf("[%s] criterion %d: %s (%.3f s) %s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.elapsed,
                r.detail.c_str());
    std::fflush(stdout);
    failed += r.passed ? 0 : 1;
  }
  std::printf("%d of %zu criteria failed\n", failed, cpindex::selftest::criteria().size());
  return failed == 0 ? 0 : 1;
}
