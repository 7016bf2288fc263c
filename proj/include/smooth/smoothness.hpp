#pragma once

// Membership in C_f^inf and C_r^inf, exhaustive slices of the f-smooth
// language, and the left embedding of f-smooth words into r-smooth words.

#include <cstddef>
#include <optional>
#include <vector>

#include "smooth/alphabet.hpp"

namespace smooth {

// chain[0] == word, chain[k+1] == derive_f(chain[k]), chain.back() is empty
// and no earlier element is. height == chain.size() - 1.
struct FSmoothCertificate {
  Word word;
  std::size_t height;
  std::vector<Word> chain;
};

bool is_f_smooth(const Word& u);
std::optional<FSmoothCertificate> certify_f_smooth(const Word& u);
// Height of an f-smooth word, nullopt otherwise.
std::optional<std::size_t> f_height(const Word& u);

bool is_r_smooth(const Word& u);
// Successive r-derivatives down to the empty word, nullopt if the chain
// leaves C_r^1.
std::optional<std::vector<Word>> r_chain(const Word& u);

namespace detail {
bool is_f_smooth(const Alphabet& alphabet, std::span<const Letter> u);
bool is_r_smooth(const Alphabet& alphabet, std::span<const Letter> u);
}  // namespace detail

struct EnumerationOptions {
  std::size_t max_length = 64;
  unsigned threads = 0;  // 0: hardware concurrency
};

// C_f^inf ∩ A^n in lexicographic order. Throws ResourceCapExceeded when
// n > options.max_length.
std::vector<Word> enumerate_f_smooth(const Alphabet& alphabet, std::size_t n,
                                     const EnumerationOptions& options = {});

// All slices for lengths 0..n (index = length).
std::vector<std::vector<Word>> enumerate_f_smooth_upto(
    const Alphabet& alphabet, std::size_t n,
    const EnumerationOptions& options = {});

// Letters c (sorted) with c·u (resp. u·c) f-smooth.
std::vector<Letter> left_extensions(const Word& u);
std::vector<Letter> right_extensions(const Word& u);

// v with |v| >= a+b and v·u r-smooth.
struct EmbeddingWitness {
  Word left_extension;
  Word combined;
};

// Builds the witness by induction on the height of u, starting from
// v = a^b b^a for the empty word. The previous witness only supplies run
// exponents; the letters of the new word are anchored on the first run of u
// and alternate backwards. The result is checked before returning.
//
// Throws std::invalid_argument if u is not f-smooth and
// InternalConstructionError if the check fails.
EmbeddingWitness embed_left(const Word& u);

}  // namespace smooth
