#pragma once

// Unbounded letter streams: the fixed points kappa of run-length derivation,
// the coupled pair over {1, b} (b odd) whose members derive to each other,
// and right extensions of r-smooth seeds.

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "smooth/alphabet.hpp"

namespace smooth {

enum class StreamKind { Kappa, CoupledPair, RExtension };

// Single-threaded stateful iterator. The emitted prefix is materialized; the
// self-reading streams keep a write head (end of the buffer) and a read head
// (the next run length to consume).
class SmoothStream {
 public:
  // Fixed point of the derivative starting with `start`.
  static SmoothStream kappa(const Alphabet& alphabet, Letter start);
  // which == 0: the member starting with 1; which == 1: the member starting
  // with b. Throws std::invalid_argument unless alphabet is {1, b}, b odd.
  static SmoothStream coupled_pair(const Alphabet& alphabet, int which);
  // Greedy right extension: each step appends the smallest letter keeping the
  // word r-smooth. Throws std::invalid_argument if seed is not r-smooth.
  static SmoothStream r_extension(const Word& seed);

  StreamKind kind() const noexcept { return kind_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t position() const noexcept { return position_; }

  Letter next();
  // Next n letters.
  std::vector<Letter> take(std::size_t n);

 private:
  SmoothStream(StreamKind kind, Alphabet alphabet)
      : kind_(kind), alphabet_(alphabet) {}

  void grow(std::size_t min_size);
  void grow_kappa(std::size_t min_size);
  void grow_pair(std::size_t min_size);
  void grow_extension(std::size_t min_size);

  StreamKind kind_;
  Alphabet alphabet_;
  std::size_t position_ = 0;
  Letter start_ = 0;
  int which_ = 0;
  std::size_t read_head_ = 0;
  std::vector<Letter> buf_;
  std::vector<Letter> other_;  // the partner sequence for CoupledPair
};

Word kappa_prefix(const Alphabet& alphabet, Letter start, std::size_t n);

// (x, y) with x starting with 1, y with b, D(x) = y and D(y) = x.
std::pair<Word, Word> coupled_pair_prefix(const Alphabet& alphabet,
                                          std::size_t n);

// Extends an r-smooth seed to length n, all prefixes r-smooth, choosing the
// smallest admissible letter at each step. Returns seed unchanged if
// n <= |seed|.
Word build_smooth_from_r(const Word& seed, std::size_t n);

// One derivative of a prefix of an infinite word: the final run may be
// incomplete and is dropped, every complete run must have its exponent in
// the alphabet, and the final run must not exceed b. nullopt when the
// prefix already rules out derivability.
std::optional<Word> derive_prefix(const Word& prefix);

// True iff `prefix` survives k successive derive_prefix steps.
bool check_smooth_depth(const Word& prefix, std::size_t k);

// Smallest p in [1, max_period] such that u[i] == u[i+p] on the whole word,
// 0 if none.
std::size_t smallest_period(std::span<const Letter> u, std::size_t max_period);

}  // namespace smooth
