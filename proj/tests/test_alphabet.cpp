#include <doctest.h>

#include <random>
#include <stdexcept>

#include "smooth/alphabet.hpp"
#include "support.hpp"

using namespace smooth;

TEST_CASE("alphabet construction and parity") {
  CHECK_THROWS_AS(Alphabet(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet(4, 2), std::invalid_argument);

  CHECK(Alphabet(2, 4).parity() == ParityClass::Even);
  CHECK(Alphabet(1, 3).parity() == ParityClass::Odd);
  CHECK(Alphabet(1, 2).parity() == ParityClass::Mixed);

  CHECK(Alphabet::parse("2,1") == Alphabet(1, 2));
  CHECK(Alphabet::parse("{3, 5}") == Alphabet(3, 5));
  CHECK(Alphabet::parse("10,3") == Alphabet(3, 10));
  CHECK_THROWS_AS(Alphabet::parse("1"), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet::parse("1,1"), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet::parse("x,2"), std::invalid_argument);
  CHECK(Alphabet(1, 2).str() == "{1,2}");
}

TEST_CASE("word parsing and rendering") {
  const Alphabet ab(1, 2);
  CHECK(Word::parse(ab, "").empty());
  CHECK(Word::parse(ab, "ε").empty());
  CHECK(Word::parse(ab, "1221").str() == "1221");
  CHECK_THROWS_AS(Word::parse(ab, "123"), std::invalid_argument);
  CHECK_THROWS_AS(Word(ab, {1, 3}), std::invalid_argument);

  const Alphabet wide(3, 10);
  Word w = Word::parse(wide, "10,3,3");
  CHECK(w.size() == 3);
  CHECK(w[0] == 10);
  CHECK(w.str() == "10,3,3");
  CHECK(Word::parse(wide, w.str()) == w);
}

TEST_CASE("run factorization examples") {
  const Alphabet ab(1, 2);
  CHECK(run_factorize(Word::parse(ab, "2211")) ==
        RunFactorization{{2, 2}, {1, 2}});
  CHECK(run_factorize(Word(ab)).empty());
  CHECK(factorized_length(Word(ab).letters()) == 0);

  const Alphabet a14(1, 4);
  Word u = Word::parse(a14, "4444111144441111444");
  CHECK(run_factorize(u) ==
        RunFactorization{{4, 4}, {1, 4}, {4, 4}, {1, 4}, {4, 3}});
  CHECK(factorized_length(u.letters()) == 5);
  CHECK(render_runs(run_factorize(Word::parse(ab, "2211"))) == "2^2·1^2");
}

TEST_CASE("complement and reversal examples") {
  CHECK(complement(Word::parse(Alphabet(1, 2), "12212")).str() == "21121");
  CHECK(complement(Word(Alphabet(1, 3))).empty());
  CHECK(complement(Word::parse(Alphabet(2, 4), "2244")).str() == "4422");
  CHECK(reversal(Word::parse(Alphabet(1, 2), "211")).str() == "112");
  CHECK(reversal(Word(Alphabet(1, 2))).empty());
  CHECK(reversal(Word::parse(Alphabet(1, 2), "12212")).str() == "21221");
}

TEST_CASE("parity count examples") {
  ParityCountVector v = parity_counts(Word::parse(Alphabet(1, 3), "1331"));
  CHECK(v == ParityCountVector{1, 1, 1, 1});
  CHECK(parity_counts(Word(Alphabet(1, 3))) == ParityCountVector{});
  // "13": 1 at position 1 (odd), 3 at position 2 (even).
  CHECK(parity_counts(Word::parse(Alphabet(1, 3), "13")) ==
        ParityCountVector{0, 1, 1, 0});
}

TEST_CASE("round trips and involutions on random words") {
  std::mt19937_64 rng(testing::kSeed);
  for (const Alphabet& alph : testing::small_alphabets()) {
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t len = rng() % 40;
      Word u = testing::random_word(rng, alph, len);
      const RunFactorization runs = run_factorize(u);
      CHECK(Word::from_runs(alph, runs) == u);
      CHECK(Word::parse(alph, u.str()) == u);
      CHECK(complement(complement(u)) == u);
      CHECK(reversal(reversal(u)) == u);

      RunFactorization swapped = run_factorize(complement(u));
      REQUIRE(swapped.size() == runs.size());
      for (std::size_t i = 0; i < runs.size(); ++i) {
        CHECK(swapped[i].letter == alph.complement(runs[i].letter));
        CHECK(swapped[i].exponent == runs[i].exponent);
      }

      const ParityCountVector pc = parity_counts(u);
      CHECK(pc.total() == u.size());
      if (u.size() % 2 == 0) {
        CHECK(pc.count_a_odd + pc.count_b_odd == u.size() / 2);
      }
    }
  }
}

TEST_CASE("word slicing") {
  const Alphabet ab(1, 2);
  Word u = Word::parse(ab, "12211");
  CHECK(u.prefix(2).str() == "12");
  CHECK(u.suffix(2).str() == "11");
  CHECK(u.factor(1, 3).str() == "221");
  CHECK(u.append(2).str() == "122112");
  CHECK(u.prepend(2).str() == "212211");
  CHECK(u.concat(u).size() == 10);
  CHECK(Word::power(ab, 2, 3).str() == "222");
  CHECK(count_letter(u.letters(), 1) == 3);
}
