#pragma once

// Fixed-seed word generators and naive reference implementations shared by
// the unit tests. The oracles work on plain int vectors and never call into
// the library.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "smooth/alphabet.hpp"

namespace testing {

using smooth::Alphabet;
using smooth::Letter;
using smooth::Word;

inline constexpr std::uint64_t kSeed = 0x5eed5eedULL;

inline std::vector<Alphabet> small_alphabets() {
  return {Alphabet(1, 2), Alphabet(1, 3), Alphabet(2, 3), Alphabet(2, 4),
          Alphabet(1, 4), Alphabet(2, 5), Alphabet(3, 5), Alphabet(3, 4)};
}

inline Word random_word(std::mt19937_64& rng, const Alphabet& alph,
                        std::size_t len) {
  std::bernoulli_distribution coin(0.5);
  std::vector<Letter> v(len);
  for (auto& c : v) c = coin(rng) ? alph.a() : alph.b();
  return Word(alph, std::move(v));
}

// Random word assembled from runs whose exponents lie in [1, max_exp], so
// that derivable words show up often.
inline Word random_run_word(std::mt19937_64& rng, const Alphabet& alph,
                            std::size_t runs, std::size_t max_exp) {
  std::uniform_int_distribution<std::size_t> exp(1, max_exp);
  std::bernoulli_distribution coin(0.5);
  Letter c = coin(rng) ? alph.a() : alph.b();
  std::vector<Letter> v;
  for (std::size_t r = 0; r < runs; ++r) {
    v.insert(v.end(), exp(rng), c);
    c = alph.complement(c);
  }
  return Word(alph, std::move(v));
}

inline std::vector<std::size_t> naive_runs(const std::vector<Letter>& u) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i == 0 || u[i] != u[i - 1]) out.push_back(0);
    ++out.back();
  }
  return out;
}

enum class NaiveOp { F, R, Huang };

// Run-length derivative written directly from the definitions.
inline std::optional<std::vector<Letter>> naive_derive(
    const Alphabet& alph, const std::vector<Letter>& u, NaiveOp op) {
  const auto runs = naive_runs(u);
  const std::size_t a = alph.a(), b = alph.b();
  std::vector<Letter> out;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const std::size_t p = runs[i];
    const bool boundary =
        (i + 1 == runs.size()) || (i == 0 && op != NaiveOp::R);
    if (!boundary) {
      if (p != a && p != b) return std::nullopt;
      out.push_back(static_cast<Letter>(p));
      continue;
    }
    if (p < 1 || p > b) return std::nullopt;
    const bool keep = op == NaiveOp::Huang ? p == b : p > a;
    if (keep) out.push_back(alph.b());
  }
  return out;
}

inline bool naive_f_smooth(const Alphabet& alph, std::vector<Letter> u) {
  while (!u.empty()) {
    auto d = naive_derive(alph, u, NaiveOp::F);
    if (!d) return false;
    u = std::move(*d);
  }
  return true;
}

// All f-smooth words of length n, by filtering the full cube.
inline std::set<std::vector<Letter>> naive_f_slice(const Alphabet& alph,
                                                   std::size_t n) {
  std::set<std::vector<Letter>> out;
  std::vector<Letter> u(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    for (std::size_t i = 0; i < n; ++i) {
      u[i] = (mask >> (n - 1 - i)) & 1 ? alph.b() : alph.a();
    }
    if (naive_f_smooth(alph, u)) out.insert(u);
  }
  return out;
}

inline bool is_factor(const std::vector<Letter>& hay,
                      const std::vector<Letter>& needle) {
  if (needle.size() > hay.size()) return false;
  for (std::size_t i = 0; i + needle.size() <= hay.size(); ++i) {
    if (std::equal(needle.begin(), needle.end(), hay.begin() + i)) return true;
  }
  return false;
}

}  // namespace testing
