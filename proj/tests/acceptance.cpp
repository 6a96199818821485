// Acceptance suite: runs every verification criterion at its fixed tolerance
// and prints one pass/fail line per criterion.  Nonzero exit on any failure.

#include <chrono>
#include <cstdio>

#include "sgtau/verify.hpp"

int main() {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  int failures = 0;
  auto last = start;
  const auto report = sgtau::verify::run_verification(
      "", [&](const sgtau::verify::CriterionResult& c) {
        const auto now = clock::now();
        const double dt =
            std::chrono::duration<double>(now - last).count();
        last = now;
        double worst = 0.0;
        for (const auto& it : c.items)
          worst = std::max(worst, it.tolerance > 0.0 ? it.deviation / it.tolerance
                                                     : it.deviation);
        std::printf("[%s] %-18s (%2zu checks, worst dev/tol %.2e, %5.1fs) %s\n",
                    c.pass ? "PASS" : "FAIL", c.name.c_str(), c.items.size(),
                    worst, dt, c.description.c_str());
        for (const auto& it : c.items)
          if (!it.pass)
            std::printf("       FAIL %s: observed %.12g expected %.12g "
                        "(deviation %.3e > tol %.3e)\n",
                        it.label.c_str(), it.observed, it.analytic,
                        it.deviation, it.tolerance);
        std::fflush(stdout);
        if (!c.pass) ++failures;
      });
  const double total = std::chrono::duration<double>(clock::now() - start).count();
  std::printf("%s: %zu criteria, %d failed, %.1fs total\n",
              report.all_pass ? "ALL PASS" : "FAILURES", report.criteria.size(),
              failures, total);
  return report.all_pass ? 0 : 1;
}
