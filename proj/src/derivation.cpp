#include "smooth/derivation.hpp"

namespace smooth {

const char* to_string(DerivationOp op) {
  switch (op) {
    case DerivationOp::F:
      return "f";
    case DerivationOp::R:
      return "r";
    case DerivationOp::Huang:
      return "huang";
  }
  return "?";
}

NotDerivable::NotDerivable(DerivationOp op, std::string word,
                           DerivabilityReport report)
    : Error([&] {
        std::string shown = word.empty() ? "ε" : word;
        std::string msg = shown + " not derivable";
        if (op == DerivationOp::R) msg = shown + " not r-derivable";
        if (report.offending_run_index) {
          msg += " (run " + std::to_string(*report.offending_run_index + 1) +
                 " has exponent " +
                 std::to_string(report.offending_exponent.value_or(0)) + ")";
        }
        return msg;
      }()),
      op_(op),
      word_(std::move(word)),
      report_(std::move(report)) {}

namespace {

enum class Cut { F, Huang };

// Appends cut(p) to out. Precondition: 1 <= p <= b.
inline void append_cut(const Alphabet& alph, Cut cut, std::size_t p,
                       std::vector<Letter>& out) {
  if (cut == Cut::F ? p > alph.a() : p == alph.b()) out.push_back(alph.b());
}

inline bool in_alphabet(const Alphabet& alph, std::size_t p) {
  return p == alph.a() || p == alph.b();
}

// Shared scan. `keep_first` selects derive_r (first run kept verbatim)
// versus the two-sided cut. Returns the report; fills `out` on success.
DerivabilityReport derive_scan(const Alphabet& alph, std::span<const Letter> u,
                               bool keep_first, Cut cut,
                               std::vector<Letter>& out) {
  out.clear();
  const std::size_t len = u.size();
  if (len == 0) return DerivabilityReport::ok();

  std::size_t run_index = 0;
  std::size_t start = 0;
  while (start < len) {
    std::size_t end = start + 1;
    while (end < len && u[end] == u[start]) ++end;
    const std::size_t p = end - start;
    const bool first = start == 0;
    const bool last = end == len;
    if (last) {
      // Covers the single-run case for every operator: D(c^p) = cut(p).
      if (p > alph.b()) return DerivabilityReport::failure(run_index, p);
      if (first || !keep_first) {
        append_cut(alph, cut, p, out);
      } else {
        append_cut(alph, Cut::F, p, out);
      }
    } else if (first && !keep_first) {
      if (p > alph.b()) return DerivabilityReport::failure(run_index, p);
      append_cut(alph, cut, p, out);
    } else {
      if (!in_alphabet(alph, p)) {
        return DerivabilityReport::failure(run_index, p);
      }
      out.push_back(static_cast<Letter>(p));
    }
    start = end;
    ++run_index;
  }
  return DerivabilityReport::ok();
}

Word derive_checked(const Word& u, DerivationOp op) {
  std::vector<Letter> out;
  DerivabilityReport rep =
      op == DerivationOp::R
          ? derive_scan(u.alphabet(), u.letters(), true, Cut::F, out)
          : derive_scan(u.alphabet(), u.letters(), false,
                        op == DerivationOp::F ? Cut::F : Cut::Huang, out);
  if (!rep.derivable) {
    if (op == DerivationOp::R) throw NotRDerivable(u.str(), rep);
    throw NotDerivable(op, u.str(), rep);
  }
  return make_word_unchecked(u.alphabet(), std::move(out));
}

}  // namespace

Word cut_f(std::size_t p, const Alphabet& alphabet) {
  if (p < 1 || p > alphabet.b()) {
    throw NotDerivable(DerivationOp::F, "run of length " + std::to_string(p),
                       DerivabilityReport::failure(0, p));
  }
  std::vector<Letter> out;
  append_cut(alphabet, Cut::F, p, out);
  return make_word_unchecked(alphabet, std::move(out));
}

DerivabilityReport check_f_derivable(const Word& u) {
  std::vector<Letter> scratch;
  return derive_scan(u.alphabet(), u.letters(), false, Cut::F, scratch);
}

DerivabilityReport check_r_derivable(const Word& u) {
  std::vector<Letter> scratch;
  return derive_scan(u.alphabet(), u.letters(), true, Cut::F, scratch);
}

Word derive_f(const Word& u) { return derive_checked(u, DerivationOp::F); }
Word derive_r(const Word& u) { return derive_checked(u, DerivationOp::R); }
Word derive_huang(const Word& u) {
  return derive_checked(u, DerivationOp::Huang);
}

Word derive(DerivationOp op, const Word& u) { return derive_checked(u, op); }

namespace detail {

bool derive_f_into(const Alphabet& alphabet, std::span<const Letter> u,
                   std::vector<Letter>& out) {
  return derive_scan(alphabet, u, false, Cut::F, out).derivable;
}

bool derive_r_into(const Alphabet& alphabet, std::span<const Letter> u,
                   std::vector<Letter>& out) {
  return derive_scan(alphabet, u, true, Cut::F, out).derivable;
}

bool derive_huang_into(const Alphabet& alphabet, std::span<const Letter> u,
                       std::vector<Letter>& out) {
  return derive_scan(alphabet, u, false, Cut::Huang, out).derivable;
}

}  // namespace detail

}  // namespace smooth
