// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.
// RZ_MUTATE=defect corrupts the defect rounding as a negative control and
// RZ_BUDGET overrides the census search-space ceiling.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "rz/acceptance.hpp"
#include "rz/dimension.hpp"

int main(int argc, char** argv) {
  rz::AcceptanceOptions opt;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--max-height") && i + 1 < argc) {
      opt.max_height = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--max-height H]\n", argv[0]);
      return 1;
    }
  }
  if (const char* m = std::getenv("RZ_MUTATE"); m && !std::strcmp(m, "defect"))
    rz::testing::mutate_defect_ceil = true;
  if (const char* b = std::getenv("RZ_BUDGET")) {
    char* end = nullptr;
    opt.budget = std::strtoull(b, &end, 10);
    if (end == b || *end) {
      std::fprintf(stderr, "RZ_BUDGET must be an unsigned integer\n");
      return 1;
    }
  }

  bool all = true;
  double total = 0;
  for (const auto& c : rz::run_acceptance(opt)) {
    std::printf("[%s] %d. %s (%.2fs)%s%s\n", c.pass ? "PASS" : "FAIL", c.index,
                c.name.c_str(), c.seconds, c.detail.empty() ? "" : ": ",
                c.detail.c_str());
    all = all && c.pass;
    total += c.seconds;
  }
  std::printf("%s in %.2fs\n", all ? "all criteria passed" : "FAILURES PRESENT", total);
  return all ? 0 : 1;
}
