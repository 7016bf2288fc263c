#include <doctest.h>

#include <string>

#include "smooth/derivation.hpp"
#include "smooth/generators.hpp"
#include "smooth/smoothness.hpp"

using namespace smooth;

namespace {

// Drops the last run of a prefix of an infinite word, which may be cut short.
Word trim_last_run(const Word& u) {
  std::size_t k = u.size();
  while (k > 0 && u[k - 1] == u.back()) --k;
  return u.prefix(k);
}

bool is_prefix(const Word& p, const Word& u) {
  return p.size() <= u.size() && u.prefix(p.size()) == p;
}

}  // namespace

TEST_CASE("kappa displays") {
  CHECK(kappa_prefix(Alphabet(1, 2), 2, 60).str() ==
        "221121221221121122121121221121121221221121221211211221221121");
  CHECK(kappa_prefix(Alphabet(1, 3), 3, 60).str() ==
        "333111333131333111333133313331113331313331113331333111333133");
  CHECK(kappa_prefix(Alphabet(2, 4), 2, 60).str() ==
        "224422224444224422442222444422224444224422224444224422224444");
  CHECK(kappa_prefix(Alphabet(1, 2), 1, 0).empty());
  CHECK_THROWS_AS(kappa_prefix(Alphabet(1, 2), 3, 5), std::invalid_argument);
}

TEST_CASE("kappa is a fixed point at prefix scale") {
  for (const Alphabet& alph :
       {Alphabet(1, 2), Alphabet(1, 3), Alphabet(2, 4), Alphabet(3, 5)}) {
    for (Letter start : {alph.a(), alph.b()}) {
      for (std::size_t n : {10u, 57u, 300u, 1000u}) {
        Word k = kappa_prefix(alph, start, n);
        Word d = trim_last_run(derive_r(trim_last_run(k)));
        CHECK_MESSAGE(is_prefix(d, k), alph.str() << " start " << start);
      }
    }
  }
}

TEST_CASE("kappa over {1,b} is 1 followed by kappa over {b,1}") {
  for (Letter b : {2u, 3u, 4u}) {
    const Alphabet alph(1, b);
    Word one = kappa_prefix(alph, 1, 501);
    Word bee = kappa_prefix(alph, b, 500);
    CHECK(one == bee.prepend(1));
  }
}

TEST_CASE("kappa prefixes are aperiodic with small periods") {
  for (const Alphabet& alph :
       {Alphabet(1, 2), Alphabet(1, 3), Alphabet(2, 4), Alphabet(3, 5)}) {
    for (Letter start : {alph.a(), alph.b()}) {
      Word k = kappa_prefix(alph, start, 5000);
      CHECK(smallest_period(k.letters(), 100) == 0);
    }
  }
  const Alphabet ab(1, 2);
  Word periodic = Word::parse(ab, "1212121212");
  CHECK(smallest_period(periodic.letters(), 5) == 2);
}

TEST_CASE("coupled pair displays") {
  auto [x, y] = coupled_pair_prefix(Alphabet(1, 3), 67);
  CHECK(x.str() ==
        "1113111313111311131311131311131113131113111313111313111311131311131");
  CHECK(y.str() ==
        "3131113131113111313111313111311131311131113131113131113111313111313");
  CHECK_THROWS_AS(coupled_pair_prefix(Alphabet(1, 2), 10),
                  std::invalid_argument);
  CHECK_THROWS_AS(coupled_pair_prefix(Alphabet(3, 5), 10),
                  std::invalid_argument);
}

TEST_CASE("coupled pair derives into each other and avoids bb") {
  for (Letter b : {3u, 5u, 7u}) {
    const Alphabet alph(1, b);
    auto [x, y] = coupled_pair_prefix(alph, 5000);
    Word dx = trim_last_run(derive_r(trim_last_run(x)));
    Word dy = trim_last_run(derive_r(trim_last_run(y)));
    CHECK(is_prefix(dx, y));
    CHECK(is_prefix(dy, x));
    const std::string bb = std::to_string(b) + std::to_string(b);
    CHECK(x.str().find(bb) == std::string::npos);
    CHECK(y.str().find(bb) == std::string::npos);
  }
}

TEST_CASE("generated prefixes are r-smooth once the last run is trimmed") {
  const Alphabet ab(1, 2);
  Word k = kappa_prefix(ab, 2, 400);
  auto [x, y] = coupled_pair_prefix(Alphabet(1, 3), 400);
  for (std::size_t n = 1; n <= 400; n += 7) {
    CHECK(is_r_smooth(trim_last_run(k.prefix(n))));
    CHECK(is_r_smooth(trim_last_run(x.prefix(n))));
    CHECK(is_r_smooth(trim_last_run(y.prefix(n))));
  }
}

TEST_CASE("streams continue the materialized prefix") {
  const Alphabet alph(1, 3);
  SmoothStream s = SmoothStream::kappa(alph, 1);
  std::vector<Letter> head = s.take(30);
  head.push_back(s.next());
  auto rest = s.take(20);
  head.insert(head.end(), rest.begin(), rest.end());
  CHECK(head == kappa_prefix(alph, 1, 51).vec());
  CHECK(s.position() == 51);

  SmoothStream p = SmoothStream::coupled_pair(alph, 1);
  CHECK(p.take(67) == coupled_pair_prefix(alph, 67).second.vec());
}

TEST_CASE("right extension of r-smooth seeds") {
  const Alphabet ab(1, 2);
  Word ten = build_smooth_from_r(Word(ab), 10);
  CHECK(ten.size() == 10);
  for (std::size_t k = 0; k <= 10; ++k) CHECK(is_r_smooth(ten.prefix(k)));

  CHECK(build_smooth_from_r(Word::parse(ab, "112"), 3).str() == "112");

  Word eight = build_smooth_from_r(Word::parse(ab, "211"), 8);
  CHECK(eight.size() == 8);
  CHECK(eight.prefix(3).str() == "211");
  for (std::size_t k = 0; k <= 8; ++k) CHECK(is_r_smooth(eight.prefix(k)));

  CHECK_THROWS_AS(build_smooth_from_r(Word::parse(ab, "111"), 5),
                  std::invalid_argument);
}

TEST_CASE("smooth depth checks") {
  CHECK(check_smooth_depth(kappa_prefix(Alphabet(1, 2), 2, 200), 4));
  CHECK(check_smooth_depth(kappa_prefix(Alphabet(2, 4), 2, 500), 3));
  Word periodic = Word::parse(Alphabet(1, 2), "12121212121212121212");
  CHECK_FALSE(check_smooth_depth(periodic, 2));
}
