#include "smooth/bispecial.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "parallel.hpp"
#include "smooth/derivation.hpp"
#include "smooth/errors.hpp"
#include "smooth/smoothness.hpp"

namespace smooth {

const char* to_string(Family f) {
  switch (f) {
    case Family::T: return "T";
    case Family::T1: return "T1";
    case Family::T2: return "T2";
    case Family::T3: return "T3";
    case Family::T4: return "T4";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view text) {
  for (Family f : {Family::T, Family::T1, Family::T2, Family::T3, Family::T4}) {
    if (text == to_string(f)) return f;
  }
  if (text == "0") return Family::T;
  if (text.size() == 1 && text[0] >= '1' && text[0] <= '4') {
    return static_cast<Family>(text[0] - '0');
  }
  return std::nullopt;
}

const char* to_string(BispecialKind k) {
  switch (k) {
    case BispecialKind::Weak: return "weak";
    case BispecialKind::Neutral: return "neutral";
    case BispecialKind::Strong: return "strong";
    case BispecialKind::NotBispecial: return "not-bispecial";
  }
  return "?";
}

const char* to_string(Provenance p) {
  return p == Provenance::BruteForce ? "brute-force" : "tree-derived";
}

namespace detail {

void primitive_into(const Alphabet& alphabet, std::span<const Letter> u,
                    Letter c, std::vector<Letter>& out) {
  const Letter other = alphabet.complement(c);
  std::size_t total = 2 * static_cast<std::size_t>(alphabet.a());
  for (Letter x : u) total += x;
  out.clear();
  out.reserve(total);
  out.insert(out.end(), alphabet.a(), c);
  bool use_other = true;
  for (Letter x : u) {
    out.insert(out.end(), x, use_other ? other : c);
    use_other = !use_other;
  }
  out.insert(out.end(), alphabet.a(), use_other ? other : c);
}

}  // namespace detail

Word primitive(const Word& u, Letter c) {
  if (!u.alphabet().contains(c)) {
    throw std::invalid_argument("primitive: letter " + std::to_string(c) +
                                " not in " + u.alphabet().str());
  }
  std::vector<Letter> out;
  detail::primitive_into(u.alphabet(), u.letters(), c, out);
  return make_word_unchecked(u.alphabet(), std::move(out));
}

namespace {

// One-sided extension flags indexed by letter (a, b), and the number of
// smooth two-sided extensions when all four one-sided ones exist.
struct Probe {
  bool left[2] = {false, false};
  bool right[2] = {false, false};
  int both = 0;
};

Probe probe(const Alphabet& alph, std::span<const Letter> u,
            std::vector<Letter>& buf) {
  const std::array<Letter, 2> letters{alph.a(), alph.b()};
  Probe pr;
  for (int i = 0; i < 2; ++i) {
    buf.assign(1, letters[i]);
    buf.insert(buf.end(), u.begin(), u.end());
    pr.left[i] = detail::is_f_smooth(alph, buf);
    buf.assign(u.begin(), u.end());
    buf.push_back(letters[i]);
    pr.right[i] = detail::is_f_smooth(alph, buf);
  }
  if (!(pr.left[0] && pr.left[1] && pr.right[0] && pr.right[1])) return pr;
  for (Letter x : letters) {
    for (Letter y : letters) {
      buf.assign(1, x);
      buf.insert(buf.end(), u.begin(), u.end());
      buf.push_back(y);
      if (detail::is_f_smooth(alph, buf)) ++pr.both;
    }
  }
  return pr;
}

BispecialKind kind_of(const Alphabet& alph, std::span<const Letter> u,
                      std::vector<Letter>& buf) {
  Probe pr = probe(alph, u, buf);
  if (!(pr.left[0] && pr.left[1] && pr.right[0] && pr.right[1])) {
    return BispecialKind::NotBispecial;
  }
  return static_cast<BispecialKind>(pr.both - 3);
}

}  // namespace

bool is_bispecial(const Word& u) {
  return bispecial_kind(u) != BispecialKind::NotBispecial;
}

int multiplicity(const Word& u) {
  BispecialKind k = bispecial_kind(u);
  if (k == BispecialKind::NotBispecial) {
    throw std::invalid_argument("multiplicity: " + u.str() +
                                " is not bispecial");
  }
  return static_cast<int>(k);
}

BispecialKind bispecial_kind(const Word& u) {
  std::vector<Letter> buf;
  return kind_of(u.alphabet(), u.letters(), buf);
}

std::vector<ShortBispecial> classify_short_bispecials(const Alphabet& alphabet) {
  std::vector<ShortBispecial> out;
  Word empty(alphabet);
  out.push_back({empty, bispecial_kind(empty)});
  for (Letter c : {alphabet.a(), alphabet.b()}) {
    for (std::size_t n = 1; n <= alphabet.b(); ++n) {
      Word w = Word::power(alphabet, c, n);
      out.push_back({w, bispecial_kind(w)});
    }
  }
  return out;
}

std::vector<Family> families(const Alphabet& alphabet) {
  if (alphabet.a() + 1 == alphabet.b()) return {Family::T};
  return {Family::T, Family::T1, Family::T2, Family::T3, Family::T4};
}

Word family_root(const Alphabet& alphabet, Family family) {
  const Letter a = alphabet.a();
  const Letter b = alphabet.b();
  if (family != Family::T && a + 1 == b) {
    throw InvalidFamily(std::string("family ") + to_string(family) +
                        " is empty over " + alphabet.str() +
                        " (needs a < b-1)");
  }
  switch (family) {
    case Family::T: return Word(alphabet);
    case Family::T1: return Word::power(alphabet, a, a);
    case Family::T2: return Word::power(alphabet, b, a);
    case Family::T3: return Word::power(alphabet, a, b - 1);
    case Family::T4: return Word::power(alphabet, b, b - 1);
  }
  throw std::invalid_argument("unknown family");
}

int family_multiplicity(Family family) {
  return family == Family::T3 || family == Family::T4 ? -1 : 1;
}

namespace {

void check_generation_cap(std::size_t i, const TreeOptions& options) {
  if (i > options.max_generation) {
    throw ResourceCapExceeded("tree generation", i, options.max_generation);
  }
}

}  // namespace

std::vector<BispecialNode> tree_generation(const Alphabet& alphabet,
                                           Family family, std::size_t i,
                                           const TreeOptions& options) {
  check_generation_cap(i, options);
  Word root = family_root(alphabet, family);
  std::vector<std::vector<Letter>> level{root.vec()};
  for (std::size_t g = 0; g < i; ++g) {
    std::vector<std::vector<Letter>> next(2 * level.size());
    detail::parallel_chunks(
        level.size(), options.threads,
        [&](std::size_t begin, std::size_t end, std::size_t) {
          for (std::size_t k = begin; k < end; ++k) {
            detail::primitive_into(alphabet, level[k], alphabet.a(),
                                   next[2 * k]);
            detail::primitive_into(alphabet, level[k], alphabet.b(),
                                   next[2 * k + 1]);
          }
        });
    level.swap(next);
  }

  const int m = family_multiplicity(family);
  if (options.verify_bispecial) {
    detail::parallel_chunks(
        level.size(), options.threads,
        [&](std::size_t begin, std::size_t end, std::size_t) {
          std::vector<Letter> buf;
          for (std::size_t k = begin; k < end; ++k) {
            BispecialKind got = kind_of(alphabet, level[k], buf);
            if (got != static_cast<BispecialKind>(m)) {
              throw InternalConstructionError(
                  "tree word " + render(alphabet, level[k]) + " in family " +
                  to_string(family) + " is " + to_string(got));
            }
          }
        });
  }

  std::vector<BispecialNode> out;
  out.reserve(level.size());
  for (auto& w : level) {
    out.push_back({make_word_unchecked(alphabet, std::move(w)), family, i, m});
  }
  return out;
}

void walk_tree(const Alphabet& alphabet, Family family,
               std::size_t max_generation, const TreeVisitor& visit) {
  Word root = family_root(alphabet, family);
  // bufs[g] holds the current word of generation g.
  std::vector<std::vector<Letter>> bufs(max_generation + 1);
  bufs[0] = root.vec();
  auto rec = [&](auto&& self, std::size_t g) -> void {
    std::span<const Letter> parent;
    if (g > 0) parent = bufs[g - 1];
    if (!visit(bufs[g], parent, g) || g == max_generation) return;
    for (Letter c : {alphabet.a(), alphabet.b()}) {
      detail::primitive_into(alphabet, bufs[g], c, bufs[g + 1]);
      self(self, g + 1);
    }
  };
  rec(rec, 0);
}

namespace {

using Histograms = std::vector<std::map<std::size_t, std::uint64_t>>;

// Length histograms of every generation up to max_gen, skipping subtrees
// whose root is longer than max_len (primitives only lengthen words).
// Subtrees below a small breadth-first frontier are walked in parallel.
Histograms tree_histograms(const Alphabet& alph, Family family,
                           std::size_t max_gen, std::size_t max_len,
                           unsigned threads) {
  Histograms hist(max_gen + 1);
  std::vector<std::vector<Letter>> frontier{family_root(alph, family).vec()};
  if (frontier[0].size() > max_len) return hist;

  const std::size_t want = 8 * static_cast<std::size_t>(
                                   detail::resolve_threads(threads));
  std::size_t depth = 0;
  while (depth < max_gen && frontier.size() < want) {
    std::vector<std::vector<Letter>> next;
    std::vector<Letter> child;
    for (const auto& w : frontier) {
      ++hist[depth][w.size()];
      for (Letter c : {alph.a(), alph.b()}) {
        detail::primitive_into(alph, w, c, child);
        if (child.size() <= max_len) next.push_back(child);
      }
    }
    frontier.swap(next);
    ++depth;
  }

  const std::size_t chunks = detail::chunk_count(frontier.size(), threads, 2);
  std::vector<Histograms> parts(chunks, Histograms(max_gen + 1));
  detail::parallel_chunks(
      frontier.size(), threads,
      [&](std::size_t begin, std::size_t end, std::size_t k) {
        Histograms& h = parts[k];
        std::vector<std::vector<Letter>> bufs(max_gen + 1);
        auto rec = [&](auto&& self, std::size_t g) -> void {
          ++h[g][bufs[g].size()];
          if (g == max_gen) return;
          for (Letter c : {alph.a(), alph.b()}) {
            detail::primitive_into(alph, bufs[g], c, bufs[g + 1]);
            if (bufs[g + 1].size() <= max_len) self(self, g + 1);
          }
        };
        for (std::size_t j = begin; j < end; ++j) {
          bufs[depth] = frontier[j];
          rec(rec, depth);
        }
      },
      2);

  for (const auto& part : parts) {
    for (std::size_t g = 0; g <= max_gen; ++g) {
      for (const auto& [len, n] : part[g]) hist[g][len] += n;
    }
  }
  return hist;
}

GenerationStats stats_from_histogram(
    std::size_t g, std::map<std::size_t, std::uint64_t> histogram) {
  GenerationStats s;
  s.generation = g;
  if (!histogram.empty()) {
    s.min_len = histogram.begin()->first;
    s.max_len = histogram.rbegin()->first;
  }
  for (const auto& [len, n] : histogram) {
    s.count += n;
    s.total_len += len * n;
  }
  s.length_histogram = std::move(histogram);
  return s;
}

}  // namespace

std::vector<GenerationStats> generation_stats_upto(const Alphabet& alphabet,
                                                   Family family,
                                                   std::size_t max_i,
                                                   const TreeOptions& options) {
  check_generation_cap(max_i, options);
  Histograms hist = tree_histograms(alphabet, family, max_i, SIZE_MAX,
                                    options.threads);
  std::vector<GenerationStats> out;
  out.reserve(hist.size());
  for (std::size_t g = 0; g < hist.size(); ++g) {
    out.push_back(stats_from_histogram(g, std::move(hist[g])));
  }
  return out;
}

GenerationStats generation_stats(const Alphabet& alphabet, Family family,
                                 std::size_t i, const TreeOptions& options) {
  return std::move(generation_stats_upto(alphabet, family, i, options).back());
}

std::uint64_t average_length_total(const Alphabet& alphabet, std::size_t i) {
  using u128 = unsigned __int128;
  const u128 sum = alphabet.a() + alphabet.b();
  u128 pow_sum = 1;
  u128 pow_two = 1;
  for (std::size_t k = 0; k < i; ++k) {
    pow_sum *= sum;
    pow_two *= 2;
    if (pow_sum > (u128{1} << 100)) {
      throw std::overflow_error("average_length_total: generation " +
                                std::to_string(i) + " overflows");
    }
  }
  const u128 f = 4 * u128{alphabet.a()} * (pow_sum - pow_two) / (sum - 2);
  if (f > UINT64_MAX) {
    throw std::overflow_error("average_length_total: generation " +
                              std::to_string(i) + " overflows");
  }
  return static_cast<std::uint64_t>(f);
}

std::int64_t closed_form_contribution(const Alphabet& alphabet, std::size_t i,
                                      std::size_t n) {
  // (n + c - 1) 2^i - c (a+b)^i rearranged as (n - 1) 2^i - f(i).
  const auto f = static_cast<std::int64_t>(average_length_total(alphabet, i));
  return (static_cast<std::int64_t>(n) - 1) * (std::int64_t{1} << i) - f;
}

RootInfo root_of(const Word& u) {
  const Alphabet& alph = u.alphabet();
  if (!is_bispecial(u)) {
    throw std::invalid_argument("root_of: " + u.str() + " is not bispecial");
  }
  Word cur = u;
  std::size_t steps = 0;
  while (run_factorize(cur).size() >= 2) {
    cur = derive_f(cur);
    ++steps;
  }
  for (Family f : families(alph)) {
    if (family_root(alph, f) == cur) return {cur, f, steps};
  }
  throw std::invalid_argument("root_of: " + u.str() + " reduces to " +
                              cur.str() + ", which is " +
                              to_string(bispecial_kind(cur)));
}

Word generation_bijection(const Word& u) {
  if (u.empty()) {
    throw std::invalid_argument("generation_bijection: empty word");
  }
  const Letter first = u.front();
  return primitive(complement(derive_f(u)), u.alphabet().complement(first));
}

GenerationContribution contribution_from_histogram(
    const std::map<std::size_t, std::uint64_t>& histogram,
    std::size_t horizon) {
  GenerationContribution c;
  c.b.assign(horizon + 1, 0);
  c.s.assign(horizon + 1, 0);
  c.p.assign(horizon + 1, 0);
  for (const auto& [len, n] : histogram) {
    if (len <= horizon) c.b[len] = static_cast<std::int64_t>(n);
  }
  for (std::size_t n = 1; n <= horizon; ++n) {
    c.s[n] = c.s[n - 1] + c.b[n - 1];
    c.p[n] = c.p[n - 1] + c.s[n - 1];
  }
  return c;
}

TreeComplexity tree_complexity(const Alphabet& alphabet, Family family,
                               std::size_t horizon,
                               const TreeOptions& options) {
  Histograms hist = tree_histograms(alphabet, family, options.max_generation,
                                    horizon, options.threads);
  if (!hist.back().empty()) {
    // Words of the last allowed generation still fit under the horizon, so
    // deeper generations may contribute as well.
    throw ResourceCapExceeded("tree generation for horizon " +
                                  std::to_string(horizon),
                              options.max_generation + 1,
                              options.max_generation);
  }
  TreeComplexity out;
  out.family = family;
  out.horizon = horizon;
  out.total.assign(horizon + 1, 0);
  for (const auto& h : hist) {
    if (h.empty()) break;
    out.generations.push_back(contribution_from_histogram(h, horizon));
    for (std::size_t n = 0; n <= horizon; ++n) {
      out.total[n] += out.generations.back().p[n];
    }
  }
  return out;
}

namespace {

TreeOptions tree_options(const ComplexityOptions& options) {
  TreeOptions t;
  t.threads = options.threads;
  return t;
}

void fill_bounds(const Alphabet& alphabet, ComplexityTable& table,
                 std::size_t N, const ComplexityOptions& options) {
  TreeComplexity t =
      tree_complexity(alphabet, Family::T, N, tree_options(options));
  for (auto& row : table.rows) {
    const auto n = static_cast<std::int64_t>(row.n);
    row.lower_bound = 1 + n + t.total[row.n];
    row.upper_bound = 1 + n + 3 * t.total[row.n];
  }
}

void fill_differences(ComplexityTable& table,
                      const std::vector<std::int64_t>& p, std::size_t N) {
  for (std::size_t n = 0; n <= N; ++n) {
    ComplexityRow row;
    row.n = n;
    row.p = p[n];
    row.s = p[n + 1] - p[n];
    row.b = p[n + 2] - 2 * p[n + 1] + p[n];
    table.rows.push_back(row);
  }
}

}  // namespace

ComplexityTable exact_complexity(const Alphabet& alphabet, std::size_t N,
                                 const ComplexityOptions& options) {
  if (N > options.max_length) {
    throw ResourceCapExceeded("complexity horizon", N, options.max_length);
  }
  EnumerationOptions eo;
  eo.max_length = N + 2;
  eo.threads = options.threads;
  auto levels = enumerate_f_smooth_upto(alphabet, N + 2, eo);
  std::vector<std::int64_t> p;
  for (const auto& level : levels) {
    p.push_back(static_cast<std::int64_t>(level.size()));
  }

  ComplexityTable table{alphabet, Provenance::BruteForce, {}};
  fill_differences(table, p, N);

  for (auto& row : table.rows) {
    if (row.n > options.bispecial_horizon) break;
    const auto& words = levels[row.n];
    const std::size_t chunks = detail::chunk_count(words.size(), options.threads);
    std::vector<std::int64_t> sums(chunks, 0);
    detail::parallel_chunks(
        words.size(), options.threads,
        [&](std::size_t begin, std::size_t end, std::size_t k) {
          std::vector<Letter> buf;
          for (std::size_t j = begin; j < end; ++j) {
            BispecialKind kind = kind_of(alphabet, words[j].letters(), buf);
            if (kind != BispecialKind::NotBispecial) {
              sums[k] += static_cast<int>(kind);
            }
          }
        });
    std::int64_t total = 0;
    for (auto s : sums) total += s;
    row.bispecial_sum = total;
  }

  fill_bounds(alphabet, table, N, options);
  return table;
}

ComplexityTable tree_derived_complexity(const Alphabet& alphabet,
                                        std::size_t N,
                                        const ComplexityOptions& options) {
  const std::size_t horizon = N + 2;
  std::vector<std::int64_t> p(horizon + 1);
  for (std::size_t n = 0; n <= horizon; ++n) {
    p[n] = 1 + static_cast<std::int64_t>(n);
  }
  for (Family f : families(alphabet)) {
    TreeComplexity t =
        tree_complexity(alphabet, f, horizon, tree_options(options));
    const std::int64_t sign = family_multiplicity(f);
    for (std::size_t n = 0; n <= horizon; ++n) p[n] += sign * t.total[n];
  }
  ComplexityTable table{alphabet, Provenance::TreeDerived, {}};
  fill_differences(table, p, N);
  fill_bounds(alphabet, table, N, options);
  return table;
}

}  // namespace smooth
