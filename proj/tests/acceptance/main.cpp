// Acceptance suite runner: `acceptance [quick|full]`. Prints one line per
// criterion and exits with the number of failures.

#include <boolcov/verify.hpp>

#include <cstdio>
#include <cstring>

int main(int argc, char** argv) {
  boolcov::VerifyOptions opt;
  if (argc > 1) {
    if (std::strcmp(argv[1], "full") == 0) {
      opt.full = true;
    } else if (std::strcmp(argv[1], "quick") != 0) {
      std::fprintf(stderr, "usage: %s [quick|full]\n", argv[0]);
      return 2;
    }
  }
  auto results = boolcov::run_acceptance(opt);
  for (const auto& r : results)
    std::puts(boolcov::criterion_line(r).c_str());
  int failures = boolcov::count_failures(results);
  if (failures)
    std::printf("%d criteria failed\n", failures);
  else
    std::puts("all criteria passed");
  return failures;
}
