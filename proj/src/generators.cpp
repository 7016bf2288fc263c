#include "smooth/generators.hpp"

#include <stdexcept>

#include "smooth/errors.hpp"
#include "smooth/smoothness.hpp"

namespace smooth {

SmoothStream SmoothStream::kappa(const Alphabet& alphabet, Letter start) {
  if (!alphabet.contains(start)) {
    throw std::invalid_argument("kappa start letter not in alphabet");
  }
  SmoothStream s(StreamKind::Kappa, alphabet);
  s.start_ = start;
  return s;
}

SmoothStream SmoothStream::coupled_pair(const Alphabet& alphabet, int which) {
  if (alphabet.a() != 1 || alphabet.b() < 3 || alphabet.b() % 2 == 0) {
    throw std::invalid_argument("coupled pair needs an alphabet {1,b} with b "
                                "odd, got " + alphabet.str());
  }
  if (which != 0 && which != 1) {
    throw std::invalid_argument("coupled pair member must be 0 or 1");
  }
  SmoothStream s(StreamKind::CoupledPair, alphabet);
  s.which_ = which;
  return s;
}

SmoothStream SmoothStream::r_extension(const Word& seed) {
  if (!is_r_smooth(seed)) {
    throw std::invalid_argument("seed " + seed.str() + " is not r-smooth");
  }
  SmoothStream s(StreamKind::RExtension, seed.alphabet());
  s.buf_ = seed.vec();
  return s;
}

Letter SmoothStream::next() {
  grow(position_ + 1);
  return buf_[position_++];
}

std::vector<Letter> SmoothStream::take(std::size_t n) {
  grow(position_ + n);
  std::vector<Letter> out(buf_.begin() + static_cast<std::ptrdiff_t>(position_),
                          buf_.begin() +
                              static_cast<std::ptrdiff_t>(position_ + n));
  position_ += n;
  return out;
}

void SmoothStream::grow(std::size_t min_size) {
  switch (kind_) {
    case StreamKind::Kappa:
      grow_kappa(min_size);
      break;
    case StreamKind::CoupledPair:
      grow_pair(min_size);
      break;
    case StreamKind::RExtension:
      grow_extension(min_size);
      break;
  }
}

void SmoothStream::grow_kappa(std::size_t min_size) {
  const Letter other = alphabet_.complement(start_);
  while (buf_.size() < min_size) {
    const std::size_t i = read_head_++;
    const Letter c = i % 2 == 0 ? start_ : other;
    // When the read head catches the write head, the run being described
    // starts here, so its length is its own letter.
    const std::size_t len = i < buf_.size() ? buf_[i] : c;
    buf_.insert(buf_.end(), len, c);
  }
}

void SmoothStream::grow_pair(std::size_t min_size) {
  const Letter b = alphabet_.b();
  auto& x = which_ == 0 ? buf_ : other_;
  auto& y = which_ == 0 ? other_ : buf_;
  while (buf_.size() < min_size) {
    const std::size_t k = read_head_++;
    // y's runs have lengths read from x, x's runs lengths read from y.
    y.insert(y.end(), k == 0 ? 1 : x[k], k % 2 == 0 ? b : 1);
    x.insert(x.end(), y[k], k % 2 == 0 ? 1 : b);
  }
}

void SmoothStream::grow_extension(std::size_t min_size) {
  while (buf_.size() < min_size) {
    bool extended = false;
    for (Letter c : {alphabet_.a(), alphabet_.b()}) {
      buf_.push_back(c);
      if (detail::is_r_smooth(alphabet_, buf_)) {
        extended = true;
        break;
      }
      buf_.pop_back();
    }
    if (!extended) {
      throw InternalConstructionError("r-smooth word " +
                                      render(alphabet_, buf_) +
                                      " has no right extension");
    }
  }
}

Word kappa_prefix(const Alphabet& alphabet, Letter start, std::size_t n) {
  auto s = SmoothStream::kappa(alphabet, start);
  return make_word_unchecked(alphabet, s.take(n));
}

std::pair<Word, Word> coupled_pair_prefix(const Alphabet& alphabet,
                                          std::size_t n) {
  auto x = SmoothStream::coupled_pair(alphabet, 0);
  auto y = SmoothStream::coupled_pair(alphabet, 1);
  return {make_word_unchecked(alphabet, x.take(n)),
          make_word_unchecked(alphabet, y.take(n))};
}

Word build_smooth_from_r(const Word& seed, std::size_t n) {
  if (n <= seed.size()) return seed;
  auto s = SmoothStream::r_extension(seed);
  return make_word_unchecked(seed.alphabet(), s.take(n));
}

std::optional<Word> derive_prefix(const Word& prefix) {
  const Alphabet& alph = prefix.alphabet();
  RunFactorization runs = run_factorize(prefix);
  std::vector<Letter> out;
  if (runs.empty()) return make_word_unchecked(alph, {});
  if (runs.back().exponent > alph.b()) return std::nullopt;
  for (std::size_t i = 0; i + 1 < runs.size(); ++i) {
    const std::size_t p = runs[i].exponent;
    if (p != alph.a() && p != alph.b()) return std::nullopt;
    out.push_back(static_cast<Letter>(p));
  }
  return make_word_unchecked(alph, std::move(out));
}

bool check_smooth_depth(const Word& prefix, std::size_t k) {
  Word cur = prefix;
  for (std::size_t step = 0; step < k; ++step) {
    auto d = derive_prefix(cur);
    if (!d) return false;
    cur = std::move(*d);
  }
  return true;
}

std::size_t smallest_period(std::span<const Letter> u, std::size_t max_period) {
  for (std::size_t p = 1; p <= max_period && p < u.size(); ++p) {
    bool periodic = true;
    for (std::size_t i = 0; i + p < u.size(); ++i) {
      if (u[i] != u[i + p]) {
        periodic = false;
        break;
      }
    }
    if (periodic) return p;
  }
  return 0;
}

}  // namespace smooth
