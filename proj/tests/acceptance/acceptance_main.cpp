// Acceptance suite: runs every criterion of the regression catalog at its
// stated tolerance (all values exact) and prints one pass/fail line per
// criterion, with the per-criterion runtime bound enforced.

#include <cstdio>
#include <string>

#include "zerosum/regression.hpp"

using namespace zerosum;

namespace {

struct Limit {
  int number;
  double seconds;
};

// runtime ceilings per criterion
const Limit kLimits[] = {
    {1, 10}, {2, 300}, {3, 120}, {4, 600},  {5, 300},  {6, 300},
    {7, 60}, {8, 600}, {9, 900}, {10, 300}, {11, 60},  {12, 600},
};

}  // namespace

int main(int argc, char** argv) {
  Budget budget;
  bool verbose = false;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--verbose" || arg == "-v") verbose = true;
  }
  int failures = 0;
  for (const auto& limit : kLimits) {
    CriterionResult r;
    bool threw = false;
    std::string what;
    try {
      r = run_criterion(limit.number, budget);
    } catch (const std::exception& e) {
      threw = true;
      what = e.what();
    }
    bool in_time = !threw && r.millis <= limit.seconds * 1000.0;
    bool ok = !threw && r.pass && in_time;
    if (!ok) ++failures;
    if (threw) {
      std::printf("FAIL criterion %2d: exception: %s\n", limit.number, what.c_str());
      continue;
    }
    std::printf("%s criterion %2d: %s [%d checks, %.1f s, limit %.0f s]\n", ok ? "PASS" : "FAIL",
                r.number, r.title.c_str(), int(r.rows.size()), r.millis / 1000.0, limit.seconds);
    if (!r.pass || verbose) {
      for (const auto& row : r.rows)
        if (!row.pass || verbose)
          std::printf("    %s %s: computed %s, expected %s\n", row.pass ? "ok  " : "FAIL",
                      row.claim.c_str(), row.computed.c_str(), row.expected.c_str());
    }
    if (!in_time)
      std::printf("    runtime %.1f s exceeded the %.0f s ceiling\n", r.millis / 1000.0,
                  limit.seconds);
    for (const auto& n : r.notices) std::printf("    notice: %s\n", n.c_str());
  }
  if (failures) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
