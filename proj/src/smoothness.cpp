#include "smooth/smoothness.hpp"

#include <algorithm>
#include <stdexcept>

#include "parallel.hpp"
#include "smooth/derivation.hpp"
#include "smooth/errors.hpp"

namespace smooth {

namespace detail {

bool is_f_smooth(const Alphabet& alphabet, std::span<const Letter> u) {
  std::vector<Letter> cur(u.begin(), u.end());
  std::vector<Letter> next;
  while (!cur.empty()) {
    if (!derive_f_into(alphabet, cur, next)) return false;
    cur.swap(next);
  }
  return true;
}

bool is_r_smooth(const Alphabet& alphabet, std::span<const Letter> u) {
  std::vector<Letter> cur(u.begin(), u.end());
  std::vector<Letter> next;
  while (!cur.empty()) {
    if (!derive_r_into(alphabet, cur, next)) return false;
    cur.swap(next);
  }
  return true;
}

}  // namespace detail

bool is_f_smooth(const Word& u) {
  return detail::is_f_smooth(u.alphabet(), u.letters());
}

bool is_r_smooth(const Word& u) {
  return detail::is_r_smooth(u.alphabet(), u.letters());
}

std::optional<FSmoothCertificate> certify_f_smooth(const Word& u) {
  std::vector<Word> chain{u};
  std::vector<Letter> next;
  while (!chain.back().empty()) {
    if (!detail::derive_f_into(u.alphabet(), chain.back().letters(), next)) {
      return std::nullopt;
    }
    chain.push_back(make_word_unchecked(u.alphabet(), next));
  }
  std::size_t height = chain.size() - 1;
  return FSmoothCertificate{u, height, std::move(chain)};
}

std::optional<std::size_t> f_height(const Word& u) {
  std::vector<Letter> cur(u.letters().begin(), u.letters().end());
  std::vector<Letter> next;
  std::size_t h = 0;
  while (!cur.empty()) {
    if (!detail::derive_f_into(u.alphabet(), cur, next)) return std::nullopt;
    cur.swap(next);
    ++h;
  }
  return h;
}

std::optional<std::vector<Word>> r_chain(const Word& u) {
  std::vector<Word> chain{u};
  std::vector<Letter> next;
  while (!chain.back().empty()) {
    if (!detail::derive_r_into(u.alphabet(), chain.back().letters(), next)) {
      return std::nullopt;
    }
    chain.push_back(make_word_unchecked(u.alphabet(), next));
  }
  return chain;
}

namespace {

std::vector<Word> extend_level(const Alphabet& alph,
                               const std::vector<Word>& level,
                               unsigned threads) {
  const std::size_t chunks = detail::chunk_count(level.size(), threads);
  std::vector<std::vector<Word>> parts(chunks);
  detail::parallel_chunks(
      level.size(), threads,
      [&](std::size_t begin, std::size_t end, std::size_t k) {
        std::vector<Letter> buf;
        for (std::size_t i = begin; i < end; ++i) {
          for (Letter c : {alph.a(), alph.b()}) {
            buf.assign(level[i].letters().begin(), level[i].letters().end());
            buf.push_back(c);
            if (detail::is_f_smooth(alph, buf)) {
              parts[k].push_back(make_word_unchecked(alph, buf));
            }
          }
        }
      });
  std::vector<Word> out;
  for (auto& p : parts) {
    out.insert(out.end(), std::make_move_iterator(p.begin()),
               std::make_move_iterator(p.end()));
  }
  return out;
}

}  // namespace

std::vector<std::vector<Word>> enumerate_f_smooth_upto(
    const Alphabet& alphabet, std::size_t n,
    const EnumerationOptions& options) {
  if (n > options.max_length) {
    throw ResourceCapExceeded("f-smooth enumeration length", n,
                              options.max_length);
  }
  std::vector<std::vector<Word>> levels;
  levels.push_back({Word(alphabet)});
  // Parents suffice: C_f^inf is factorial, so every member of length k has
  // an f-smooth prefix of length k-1.
  for (std::size_t k = 1; k <= n; ++k) {
    levels.push_back(extend_level(alphabet, levels.back(), options.threads));
  }
  return levels;
}

std::vector<Word> enumerate_f_smooth(const Alphabet& alphabet, std::size_t n,
                                     const EnumerationOptions& options) {
  auto levels = enumerate_f_smooth_upto(alphabet, n, options);
  return std::move(levels.back());
}

std::vector<Letter> left_extensions(const Word& u) {
  std::vector<Letter> out;
  for (Letter c : {u.alphabet().a(), u.alphabet().b()}) {
    if (is_f_smooth(u.prepend(c))) out.push_back(c);
  }
  return out;
}

std::vector<Letter> right_extensions(const Word& u) {
  std::vector<Letter> out;
  for (Letter c : {u.alphabet().a(), u.alphabet().b()}) {
    if (is_f_smooth(u.append(c))) out.push_back(c);
  }
  return out;
}

namespace {

// Expands run exponents into letters so that run `anchor_index` carries
// `anchor_letter`, letters alternating on both sides.
std::vector<Letter> expand_anchored(const Alphabet& alph,
                                    const std::vector<std::size_t>& exps,
                                    std::size_t anchor_index,
                                    Letter anchor_letter) {
  std::vector<Letter> out;
  for (std::size_t j = 0; j < exps.size(); ++j) {
    std::size_t dist = j > anchor_index ? j - anchor_index : anchor_index - j;
    Letter c = dist % 2 == 0 ? anchor_letter : alph.complement(anchor_letter);
    out.insert(out.end(), exps[j], c);
  }
  return out;
}

}  // namespace

EmbeddingWitness embed_left(const Word& u) {
  const Alphabet& alph = u.alphabet();
  auto cert = certify_f_smooth(u);
  if (!cert) {
    throw std::invalid_argument("embed_left: " + u.str() + " is not f-smooth");
  }
  const Letter a = alph.a();
  const Letter b = alph.b();

  // Witness for the empty word: a^b b^a.
  std::vector<Letter> v(b, a);
  v.insert(v.end(), a, b);

  // Walk the derivation chain upwards: v currently works for chain[k+1].
  for (std::size_t k = cert->height; k-- > 0;) {
    const Word& cur = cert->chain[k];
    const RunFactorization runs = run_factorize(cur);
    const std::size_t p1 = runs.front().exponent;
    const std::size_t l = v.size();

    std::vector<std::size_t> exps(v.begin(), v.end());
    std::size_t anchor_index;
    Letter anchor_letter;
    if (p1 <= a) {
      if (runs.size() >= 2) {
        for (std::size_t j = 1; j < runs.size(); ++j) {
          exps.push_back(runs[j].exponent);
        }
        anchor_index = l;
        anchor_letter = runs[1].letter;
      } else {
        // The last v-run absorbs the whole single run of cur.
        anchor_index = l - 1;
        anchor_letter = runs[0].letter;
      }
    } else {
      exps.push_back(b);
      for (std::size_t j = 1; j < runs.size(); ++j) {
        exps.push_back(runs[j].exponent);
      }
      anchor_index = l;
      anchor_letter = runs[0].letter;
    }

    std::vector<Letter> w = expand_anchored(alph, exps, anchor_index,
                                            anchor_letter);
    if (w.size() < cur.size() ||
        !std::equal(cur.letters().begin(), cur.letters().end(),
                    w.end() - static_cast<std::ptrdiff_t>(cur.size()))) {
      throw InternalConstructionError("embed_left: " + cur.str() +
                                      " is not a suffix of the built word");
    }
    w.resize(w.size() - cur.size());
    v = std::move(w);
  }

  Word left = make_word_unchecked(alph, std::move(v));
  Word combined = left.concat(u);
  if (left.size() < static_cast<std::size_t>(a) + b || !is_r_smooth(combined)) {
    throw InternalConstructionError("embed_left: witness check failed for " +
                                    u.str());
  }
  return {std::move(left), std::move(combined)};
}

}  // namespace smooth
