#pragma once

// Core value types: binary integer alphabets, finite words, run
// factorizations and parity-indexed letter counts.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace smooth {

// Letters are stored as their integer values: the same numbers serve as
// letters and as run exponents.
using Letter = std::uint32_t;

enum class ParityClass { Even, Odd, Mixed };

const char* to_string(ParityClass p);

// A binary alphabet {a, b} of positive integers with 1 <= a < b.
class Alphabet {
 public:
  // Throws std::invalid_argument unless 1 <= a < b.
  Alphabet(Letter a, Letter b);

  // Parses "a,b" (either order, optional braces and spaces), e.g. "2,1".
  static Alphabet parse(std::string_view text);

  Letter a() const noexcept { return a_; }
  Letter b() const noexcept { return b_; }
  ParityClass parity() const noexcept;
  bool is_even() const noexcept { return parity() == ParityClass::Even; }
  bool is_odd() const noexcept { return parity() == ParityClass::Odd; }

  bool contains(Letter c) const noexcept { return c == a_ || c == b_; }
  // Precondition: contains(c).
  Letter complement(Letter c) const noexcept { return c == a_ ? b_ : a_; }

  // True when every letter is a single decimal digit.
  bool single_digit() const noexcept { return b_ < 10; }

  std::string str() const;  // "{a,b}"

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  Letter a_;
  Letter b_;
};

struct Run {
  Letter letter;
  std::size_t exponent;

  friend bool operator==(const Run&, const Run&) = default;
};

// Maximal runs of a word; consecutive runs carry complementary letters.
using RunFactorization = std::vector<Run>;

// Letters at odd/even positions. Positions are 1-based, so the first letter
// sits at an odd index.
struct ParityCountVector {
  std::size_t count_a_even = 0;
  std::size_t count_a_odd = 0;
  std::size_t count_b_even = 0;
  std::size_t count_b_odd = 0;

  std::size_t total() const noexcept {
    return count_a_even + count_a_odd + count_b_even + count_b_odd;
  }

  friend bool operator==(const ParityCountVector&,
                         const ParityCountVector&) = default;
};

// An immutable finite word over an Alphabet. The empty word is valid.
class Word {
 public:
  explicit Word(Alphabet alphabet) : alphabet_(alphabet) {}
  // Throws std::invalid_argument if a letter is not in the alphabet.
  Word(Alphabet alphabet, std::vector<Letter> letters);

  // Accepts the canonical rendering: concatenated digits, or comma-separated
  // integers. "" and "ε" denote the empty word.
  static Word parse(Alphabet alphabet, std::string_view text);
  static Word from_runs(Alphabet alphabet, std::span<const Run> runs);
  // c^n
  static Word power(Alphabet alphabet, Letter c, std::size_t n);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  const std::vector<Letter>& vec() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  Word prefix(std::size_t n) const;
  Word suffix(std::size_t n) const;
  Word factor(std::size_t pos, std::size_t len) const;
  Word append(Letter c) const;
  Word prepend(Letter c) const;
  Word concat(const Word& other) const;

  // Canonical text rendering.
  std::string str() const;

  friend bool operator==(const Word& x, const Word& y) {
    return x.alphabet_ == y.alphabet_ && x.letters_ == y.letters_;
  }
  // Lexicographic on letter values; words over different alphabets are
  // ordered by their letters only.
  friend std::strong_ordering operator<=>(const Word& x, const Word& y) {
    return x.letters_ <=> y.letters_;
  }

 private:
  struct Trusted {};
  Word(Alphabet alphabet, std::vector<Letter> letters, Trusted)
      : alphabet_(alphabet), letters_(std::move(letters)) {}
  friend Word make_word_unchecked(Alphabet, std::vector<Letter>);

  Alphabet alphabet_;
  std::vector<Letter> letters_;
};

// For internal hot paths whose output is in the alphabet by construction.
Word make_word_unchecked(Alphabet alphabet, std::vector<Letter> letters);

// Rendering of a raw letter sequence with the same rules as Word::str().
std::string render(const Alphabet& alphabet, std::span<const Letter> letters);

RunFactorization run_factorize(std::span<const Letter> letters);
RunFactorization run_factorize(const Word& u);
// ||u||, the number of runs.
std::size_t factorized_length(std::span<const Letter> letters);

// "letter^exp" segments joined by a middle dot.
std::string render_runs(const RunFactorization& runs);

Word complement(const Word& u);
Word reversal(const Word& u);
ParityCountVector parity_counts(const Word& u);
ParityCountVector parity_counts(const Alphabet& alphabet,
                                std::span<const Letter> letters);

std::size_t count_letter(std::span<const Letter> letters, Letter c);

}  // namespace smooth
