#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "smooth/bispecial.hpp"
#include "smooth/derivation.hpp"
#include "smooth/errors.hpp"
#include "smooth/smoothness.hpp"
#include "support.hpp"

using namespace smooth;

namespace {

std::set<std::string> words_of(const std::vector<BispecialNode>& nodes) {
  std::set<std::string> out;
  for (const auto& n : nodes) out.insert(n.word.str());
  return out;
}

// Naive multiplicity: count the smooth two-sided extensions.
int probe_multiplicity(const Word& u) {
  const Alphabet& alph = u.alphabet();
  int count = 0;
  for (Letter x : {alph.a(), alph.b()}) {
    for (Letter y : {alph.a(), alph.b()}) {
      if (is_f_smooth(u.prepend(x).append(y))) ++count;
    }
  }
  return count - 3;
}

}  // namespace

TEST_CASE("primitive examples") {
  const Alphabet ab(1, 2);
  CHECK(primitive(Word(ab), 1).str() == "12");
  CHECK(primitive(Word(ab), 2).str() == "21");
  CHECK(primitive(Word::parse(ab, "21"), 1).str() == "12212");
  CHECK(primitive(Word::parse(ab, "12"), 2).str() == "21221");
  CHECK(primitive(Word::parse(ab, "12"), 2) ==
        complement(primitive(Word::parse(ab, "12"), 1)));
}

TEST_CASE("primitive inverts derive_f and is prefix monotone") {
  std::mt19937_64 rng(testing::kSeed + 5);
  for (const Alphabet& alph : testing::small_alphabets()) {
    for (int trial = 0; trial < 200; ++trial) {
      Word v = testing::random_word(rng, alph, rng() % 16);
      for (Letter c : {alph.a(), alph.b()}) {
        Word p = primitive(v, c);
        CHECK(derive_f(p) == v);
        for (std::size_t k = 0; k <= v.size(); ++k) {
          Word pk = primitive(v.prefix(k), c);
          CHECK(p.prefix(pk.size()) == pk);
        }
      }
    }
  }
}

TEST_CASE("bispecial examples") {
  const Alphabet ab(1, 2);
  CHECK(is_bispecial(Word(ab)));
  CHECK(multiplicity(Word(ab)) == 1);
  // "2": 12, 22, 21 smooth; 121, 122, 221, 222 decide the multiplicity.
  Word two = Word::parse(ab, "2");
  CHECK(is_bispecial(two) ==
        (is_f_smooth(Word::parse(ab, "12")) &&
         is_f_smooth(Word::parse(ab, "22")) &&
         is_f_smooth(Word::parse(ab, "21"))));

  const Alphabet a14(1, 4);
  CHECK(is_bispecial(Word::parse(a14, "111")));
  CHECK(multiplicity(Word::parse(a14, "1")) == 1);
  CHECK(multiplicity(Word::parse(a14, "111")) == -1);
  CHECK(bispecial_kind(Word::parse(a14, "111")) == BispecialKind::Weak);
  CHECK(bispecial_kind(Word::parse(a14, "1111")) ==
        BispecialKind::NotBispecial);
  CHECK_THROWS_AS(multiplicity(Word::parse(a14, "1111")),
                  std::invalid_argument);
}

TEST_CASE("short bispecial classification") {
  auto split = [](const Alphabet& alph) {
    std::set<std::string> strong, weak;
    for (const auto& s : classify_short_bispecials(alph)) {
      if (s.kind == BispecialKind::Strong) strong.insert(s.word.str());
      if (s.kind == BispecialKind::Weak) weak.insert(s.word.str());
    }
    return std::pair(strong, weak);
  };
  auto [s12, w12] = split(Alphabet(1, 2));
  CHECK(s12 == std::set<std::string>{""});
  CHECK(w12.empty());
  auto [s14, w14] = split(Alphabet(1, 4));
  CHECK(s14 == std::set<std::string>{"", "1", "4"});
  CHECK(w14 == std::set<std::string>{"111", "444"});
  auto [s24, w24] = split(Alphabet(2, 4));
  CHECK(s24 == std::set<std::string>{"", "22", "44"});
  CHECK(w24 == std::set<std::string>{"222", "444"});
}

TEST_CASE("families and roots") {
  CHECK(families(Alphabet(1, 2)) == std::vector<Family>{Family::T});
  CHECK(families(Alphabet(1, 4)).size() == 5);
  CHECK_THROWS_AS(family_root(Alphabet(1, 2), Family::T1), InvalidFamily);
  const Alphabet a24(2, 4);
  CHECK(family_root(a24, Family::T).empty());
  CHECK(family_root(a24, Family::T1).str() == "22");
  CHECK(family_root(a24, Family::T2).str() == "44");
  CHECK(family_root(a24, Family::T3).str() == "222");
  CHECK(family_root(a24, Family::T4).str() == "444");
  CHECK(family_multiplicity(Family::T2) == 1);
  CHECK(family_multiplicity(Family::T4) == -1);
  CHECK(parse_family("T3") == Family::T3);
  CHECK(parse_family("2") == Family::T2);
  CHECK_FALSE(parse_family("T9"));
}

TEST_CASE("tree generations over {1,2}") {
  const Alphabet ab(1, 2);
  CHECK(words_of(tree_generation(ab, Family::T, 1)) ==
        std::set<std::string>{"21", "12"});
  CHECK(words_of(tree_generation(ab, Family::T, 2)) ==
        std::set<std::string>{"21121", "12212", "21221", "12112"});
  auto g3 = tree_generation(ab, Family::T, 3);
  CHECK(g3.size() == 8);
  auto w3 = words_of(g3);
  CHECK(w3.count("211212212") == 1);
  CHECK(w3.count("2122112112") == 1);
  for (const auto& n : g3) {
    CHECK((n.word.size() == 9 || n.word.size() == 10));
    CHECK(n.generation == 3);
    CHECK(n.multiplicity == 1);
  }
  CHECK_THROWS_AS(tree_generation(ab, Family::T, 21), ResourceCapExceeded);
}

TEST_CASE("tree edges are derivations and every node keeps its multiplicity") {
  for (const Alphabet& alph :
       {Alphabet(1, 2), Alphabet(1, 3), Alphabet(2, 4), Alphabet(1, 4)}) {
    for (Family fam : families(alph)) {
      std::size_t visited = 0;
      walk_tree(alph, fam, 6,
                [&](std::span<const Letter> word, std::span<const Letter> parent,
                    std::size_t generation) {
                  Word u(alph, {word.begin(), word.end()});
                  if (generation > 0) {
                    CHECK(derive_f(u).vec() ==
                          std::vector<Letter>(parent.begin(), parent.end()));
                  }
                  if (u.size() <= 30) {
                    CHECK(probe_multiplicity(u) == family_multiplicity(fam));
                  }
                  ++visited;
                  return true;
                });
      CHECK(visited == (std::size_t{1} << 7) - 1);
    }
  }
}

TEST_CASE("verify_bispecial option accepts every generated node") {
  TreeOptions opts;
  opts.verify_bispecial = true;
  for (Family fam : families(Alphabet(1, 4))) {
    CHECK_NOTHROW(tree_generation(Alphabet(1, 4), fam, 4, opts));
  }
}

TEST_CASE("primitives preserve multiplicity of short bispecial words") {
  for (const Alphabet& alph :
       {Alphabet(1, 2), Alphabet(1, 3), Alphabet(2, 4), Alphabet(1, 4)}) {
    for (const auto& slice : enumerate_f_smooth_upto(alph, 12)) {
      for (const Word& u : slice) {
        if (!is_bispecial(u)) continue;
        const int m = multiplicity(u);
        for (Letter c : {alph.a(), alph.b()}) {
          CHECK(multiplicity(primitive(u, c)) == m);
        }
      }
    }
  }
}

TEST_CASE("generation bijection swaps halves and is an involution") {
  for (const Alphabet& alph :
       {Alphabet(1, 2), Alphabet(1, 3), Alphabet(2, 4), Alphabet(2, 5)}) {
    for (std::size_t i = 1; i <= 7; ++i) {
      auto gen = tree_generation(alph, Family::T, i);
      std::set<std::vector<Letter>> a_half, b_half, image;
      for (const auto& n : gen) {
        (n.word.front() == alph.a() ? a_half : b_half).insert(n.word.vec());
      }
      for (const auto& n : gen) {
        Word g = generation_bijection(n.word);
        CHECK(generation_bijection(g) == n.word);
        if (n.word.front() == alph.a()) image.insert(g.vec());
      }
      CHECK(image == b_half);
      CHECK(a_half.size() == b_half.size());
    }
  }
}

TEST_CASE("generation statistics") {
  auto s = generation_stats(Alphabet(1, 2), Family::T, 2);
  CHECK(s.count == 4);
  CHECK(s.total_len == 20);
  CHECK(s.length_histogram == std::map<std::size_t, std::uint64_t>{{5, 4}});
  CHECK(average_length_total(Alphabet(1, 2), 2) == 20);

  auto e = generation_stats(Alphabet(2, 4), Family::T, 1);
  CHECK(e.min_len == 4);
  CHECK(e.max_len == 4);

  auto z = generation_stats(Alphabet(1, 3), Family::T, 0);
  CHECK(z.count == 1);
  CHECK(z.min_len == 0);
  CHECK(z.max_len == 0);

  auto upto = generation_stats_upto(Alphabet(1, 3), Family::T, 6);
  CHECK(upto[5].max_len == 86);
  CHECK(upto[6].min_len == 64);
}

TEST_CASE("length totals follow the closed form") {
  for (const Alphabet& alph :
       {Alphabet(1, 2), Alphabet(1, 3), Alphabet(2, 4), Alphabet(3, 5),
        Alphabet(2, 5)}) {
    auto stats = generation_stats_upto(alph, Family::T, 10);
    for (const auto& s : stats) {
      CHECK(s.total_len == average_length_total(alph, s.generation));
      CHECK(s.count == (std::uint64_t{1} << s.generation));
    }
  }
}

TEST_CASE("even alphabets: balanced words and l_i = L_i") {
  for (const Alphabet& alph : {Alphabet(2, 4), Alphabet(2, 6), Alphabet(4, 6)}) {
    const double c = 4.0 * alph.a() / (alph.a() + alph.b() - 2.0);
    const double half = (alph.a() + alph.b()) / 2.0;
    auto stats = generation_stats_upto(alph, Family::T, 9);
    for (const auto& s : stats) {
      CHECK(s.min_len == s.max_len);
      CHECK(static_cast<double>(s.min_len) ==
            doctest::Approx(c * std::pow(half, s.generation) - c));
    }
    for (std::size_t i = 0; i <= 6; ++i) {
      for (const auto& n : tree_generation(alph, Family::T, i)) {
        CHECK(2 * count_letter(n.word.letters(), alph.a()) == n.word.size());
      }
    }
  }
}

TEST_CASE("odd alphabets: even lengths and l_i from iterated primitives") {
  for (const Alphabet& alph : {Alphabet(1, 3), Alphabet(3, 5), Alphabet(1, 5)}) {
    auto stats = generation_stats_upto(alph, Family::T, 10);
    Word iter(alph);
    for (const auto& s : stats) {
      CHECK(s.min_len == iter.size());
      for (const auto& [len, cnt] : s.length_histogram) CHECK(len % 2 == 0);
      iter = primitive(iter, alph.a());
    }
  }
}

TEST_CASE("root_of") {
  const Alphabet ab(1, 2);
  RootInfo r = root_of(Word::parse(ab, "21121"));
  CHECK(r.root.empty());
  CHECK(r.family == Family::T);
  CHECK(r.generation == 2);
  CHECK(root_of(Word(ab)).generation == 0);

  const Alphabet a14(1, 4);
  RootInfo r1 = root_of(primitive(Word::parse(a14, "1"), 1));
  CHECK(r1.root.str() == "1");
  CHECK(r1.family == Family::T1);
  CHECK(r1.generation == 1);
  CHECK_THROWS_AS(root_of(Word::parse(a14, "1111")), std::invalid_argument);
}

TEST_CASE("tree complexity small values and convexity") {
  auto t = tree_complexity(Alphabet(1, 2), Family::T, 3);
  CHECK(t.total[0] == 0);
  CHECK(t.total[3] == 2);

  for (const Alphabet& alph : {Alphabet(1, 3), Alphabet(2, 4), Alphabet(1, 4)}) {
    for (Family fam : families(alph)) {
      auto tc = tree_complexity(alph, fam, 60);
      for (const auto& g : tc.generations) {
        for (std::size_t n = 0; n < g.b.size(); ++n) CHECK(g.b[n] >= 0);
        for (std::size_t n = 1; n + 1 < g.p.size(); ++n) {
          CHECK(g.p[n + 1] - 2 * g.p[n] + g.p[n - 1] >= 0);
        }
      }
    }
  }
}

TEST_CASE("contribution beyond L_i matches the closed form") {
  const Alphabet alph(1, 3);
  auto stats = generation_stats_upto(alph, Family::T, 5);
  for (const auto& s : stats) {
    const std::size_t horizon = s.max_len + 10;
    auto c = contribution_from_histogram(s.length_histogram, horizon);
    for (std::size_t n = s.max_len + 1; n <= horizon; ++n) {
      CHECK(c.p[n] == closed_form_contribution(alph, s.generation, n));
    }
  }
}

TEST_CASE("exact complexity against brute force") {
  auto table = exact_complexity(Alphabet(1, 2), 30);
  CHECK(table.rows[0].p == 1);
  CHECK(table.rows[1].p == 2);
  CHECK(table.rows[2].p == 4);
  CHECK(table.rows[3].p == 6);
  for (const auto& row : table.rows) {
    if (row.n <= 14) {
      CHECK(row.p == static_cast<std::int64_t>(
                         testing::naive_f_slice(Alphabet(1, 2), row.n).size()));
    }
    if (row.bispecial_sum) CHECK(*row.bispecial_sum == row.b);
    CHECK(row.lower_bound == row.p);
    CHECK(row.p <= row.upper_bound);
  }
}

TEST_CASE("five-family identity on {1,4} and {2,4}") {
  for (const Alphabet& alph : {Alphabet(1, 4), Alphabet(2, 4)}) {
    auto exact = exact_complexity(alph, 40);
    auto tree = tree_derived_complexity(alph, 40);
    for (std::size_t n = 0; n <= 40; ++n) {
      CHECK_MESSAGE(exact.rows[n].p == tree.rows[n].p,
                    alph.str() << " n=" << n);
    }
  }
}
