// Runs every acceptance criterion, printing one PASS/FAIL line each with the
// elapsed time against its budget. Exits non-zero if any criterion fails.
// Pass --full to include the long-running rows.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <iostream>
#include <thread>

#include "chipfire/repro.hpp"

int main(int argc, char** argv) {
  using namespace chipfire::repro;
  ReproOptions opt;
  opt.jobs = std::max(1u, std::thread::hardware_concurrency());
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--full") == 0) opt.scale = Scale::full;

  int failed = 0;
  for (const Criterion& c : criteria()) {
    const auto t0 = std::chrono::steady_clock::now();
    const ReproRow row = run_criterion(c, opt);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool over = c.budget_seconds > 0 && secs > c.budget_seconds;
    const char* verdict = row.status == Status::pass ? (over ? "FAIL" : "PASS")
                          : row.status == Status::fail ? "FAIL"
                                                       : "SKIP";
    if (std::strcmp(verdict, "FAIL") == 0) ++failed;
    std::printf("%s criterion %s (%s): %.2fs", verdict, c.id.c_str(), c.citation.c_str(), secs);
    if (c.budget_seconds > 0) std::printf(" / budget %.0fs", c.budget_seconds);
    if (over) std::printf(" OVER BUDGET");
    std::printf("\n");
    if (!row.expected.empty()) std::printf("    expected: %s\n", row.expected.c_str());
    std::printf("    computed: %s\n", row.computed.c_str());
    std::fflush(stdout);
  }
  std::printf("%d criterion row(s) failed\n", failed);
  return failed == 0 ? 0 : 1;
}
