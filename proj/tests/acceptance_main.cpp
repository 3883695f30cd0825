// Acceptance runner: one pass/fail line per criterion, exit 0 iff all pass.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "lamina/acceptance.hpp"
#include "lamina/parallel.hpp"

int main() {
  int threads = 1;
  if (const char* env = std::getenv("LAMINA_THREADS")) threads = std::max(1, std::atoi(env));
  lamina::Parallelism par(threads);
  auto results = lamina::run_acceptance(&par);
  for (const auto& r : results)
    std::printf("[%s] %2d  %-55s %7.2fs  %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.seconds, r.detail.c_str());
  bool ok = lamina::all_passed(results);
  std::printf("%s\n", ok ? "acceptance: all criteria passed" : "acceptance: FAILURES present");
  return ok ? 0 : 1;
}
