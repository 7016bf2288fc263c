// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
// Exit status is nonzero when any selected criterion fails.

#include <CLI11.hpp>
#include <iostream>
#include <vector>

#include "smooth/verify.hpp"

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> ids;
  bool verbose = false;
  unsigned threads = 0;
  app.add_option("--criterion,-c", ids, "criterion ids (default: all)")
      ->check(CLI::Range(1, smooth::kCriterionCount));
  app.add_flag("--verbose,-v", verbose, "print every sub-check");
  app.add_option("--threads,-j", threads, "worker threads");
  CLI11_PARSE(app, argc, argv);

  if (ids.empty()) {
    for (int id = 1; id <= smooth::kCriterionCount; ++id) ids.push_back(id);
  }
  smooth::VerifyOptions options;
  options.threads = threads;

  int failures = 0;
  for (int id : ids) {
    smooth::CriterionResult r = smooth::run_criterion(id, options);
    std::cout << smooth::format_result(r, verbose) << std::flush;
    if (r.outcome == smooth::Outcome::Fail) ++failures;
  }
  std::cout << failures << " of " << ids.size() << " criteria failed\n";
  return failures == 0 ? 0 : 1;
}
