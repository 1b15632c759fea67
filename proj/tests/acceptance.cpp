// Acceptance run: one pass/fail line per criterion, exit status 0 iff all pass.
#include <cstdio>

#include "kdiam/reproduce.hpp"

int main() {
  auto suite = kdiam::acceptance_suite();
  int failed = 0;
  for (std::size_t i = 0; i < suite.size(); ++i) {
    auto row = kdiam::run_acceptance_row(suite[i], static_cast<int>(i + 1));
    std::printf("criterion %2d %s [%.1fs] %s: %s\n", static_cast<int>(i + 1), row.passed ? "PASS" : "FAIL",
                row.seconds, row.claim.c_str(), row.detail.c_str());
    std::fflush(stdout);
    failed += !row.passed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(suite.size()) - failed, suite.size());
  return failed == 0 ? 0 : 1;
}
