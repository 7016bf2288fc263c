#pragma once

// The twelve acceptance checks, runnable individually or by suite name.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "smooth/alphabet.hpp"

namespace smooth {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

enum class Outcome { Pass, Fail, Skip };

const char* to_string(Outcome o);

struct CriterionResult {
  int id = 0;
  std::string title;
  Outcome outcome = Outcome::Skip;
  double seconds = 0.0;
  double budget_seconds = 0.0;
  std::vector<CheckResult> checks;
};

struct VerifyOptions {
  // When set, per-alphabet checks run over this alphabet only and fixed
  // examples over other alphabets are dropped.
  std::optional<Alphabet> alphabet;
  unsigned threads = 0;
  std::uint64_t seed = 20240611;
};

constexpr int kCriterionCount = 12;

std::string criterion_title(int id);
double criterion_budget_seconds(int id);

// Throws std::invalid_argument for an id outside 1..12.
CriterionResult run_criterion(int id, const VerifyOptions& options = {});

// Criterion ids of a suite: all, th1, p3p, avti, evenli, oddli, table,
// mistake, kappa, derive, tree, pair, aperiodic, or a number 1..12.
// Throws std::invalid_argument for unknown names.
std::vector<int> suite_criteria(std::string_view suite);

std::vector<std::string> suite_names();

// One "PASS|FAIL|SKIP  [id] title (time / budget)" line, followed by
// indented sub-check lines: failing ones always, all of them when verbose.
std::string format_result(const CriterionResult& r, bool verbose = false);

}  // namespace smooth
