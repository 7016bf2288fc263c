#pragma once

// Finite derivation operators.
//
//   derive_f : cut(p1) p2 ... p(n-1) cut(pn)   (both boundary runs cut)
//   derive_r : p1 p2 ... p(n-1) cut(pn)        (only the last run cut)
//   derive_huang : like derive_f but with the cut that keeps a boundary run
//                  only when its exponent is exactly b. This operator is
//                  known to be wrong when a < b-1; it is kept so that the
//                  divergence can be reproduced. Do not use it for anything
//                  else.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "smooth/alphabet.hpp"
#include "smooth/errors.hpp"

namespace smooth {

enum class DerivationOp { F, R, Huang };

const char* to_string(DerivationOp op);

struct DerivabilityReport {
  bool derivable = true;
  std::optional<std::size_t> offending_run_index;  // 0-based
  std::optional<std::size_t> offending_exponent;

  static DerivabilityReport ok() { return {}; }
  static DerivabilityReport failure(std::size_t run, std::size_t exponent) {
    return {false, run, exponent};
  }
};

class NotDerivable : public Error {
 public:
  NotDerivable(DerivationOp op, std::string word, DerivabilityReport report);

  DerivationOp op() const noexcept { return op_; }
  const std::string& word() const noexcept { return word_; }
  const DerivabilityReport& report() const noexcept { return report_; }

 private:
  DerivationOp op_;
  std::string word_;
  DerivabilityReport report_;
};

class NotRDerivable : public NotDerivable {
 public:
  NotRDerivable(std::string word, DerivabilityReport report)
      : NotDerivable(DerivationOp::R, std::move(word), std::move(report)) {}
};

// Empty word for p <= a, the letter b for a < p <= b. Throws NotDerivable
// for p outside [1, b].
Word cut_f(std::size_t p, const Alphabet& alphabet);

// Membership in C_f^1 (interior exponents in {a,b}, boundary ones in [1,b]).
DerivabilityReport check_f_derivable(const Word& u);
// Membership in C_r^1 (all but the last exponent in {a,b}, last in [1,b]).
DerivabilityReport check_r_derivable(const Word& u);

Word derive_f(const Word& u);
Word derive_r(const Word& u);
Word derive_huang(const Word& u);
Word derive(DerivationOp op, const Word& u);

namespace detail {

// Span-level derivations for hot loops. Return false (leaving `out`
// unspecified) when the input is not derivable.
bool derive_f_into(const Alphabet& alphabet, std::span<const Letter> u,
                   std::vector<Letter>& out);
bool derive_r_into(const Alphabet& alphabet, std::span<const Letter> u,
                   std::vector<Letter>& out);
bool derive_huang_into(const Alphabet& alphabet, std::span<const Letter> u,
                       std::vector<Letter>& out);

}  // namespace detail

}  // namespace smooth
