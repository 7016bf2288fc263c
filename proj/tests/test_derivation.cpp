#include <doctest.h>

#include <random>

#include "smooth/derivation.hpp"
#include "support.hpp"

using namespace smooth;

namespace {

Word w(const Alphabet& alph, const char* text) { return Word::parse(alph, text); }

}  // namespace

TEST_CASE("cut examples") {
  const Alphabet ab(1, 2);
  CHECK(cut_f(1, ab).empty());
  CHECK(cut_f(2, ab).str() == "2");
  CHECK(cut_f(3, Alphabet(1, 4)).str() == "4");
  CHECK_THROWS_AS(cut_f(3, ab), NotDerivable);
  CHECK_THROWS_AS(cut_f(0, ab), NotDerivable);
}

TEST_CASE("derive_f examples") {
  const Alphabet ab(1, 2);
  CHECK(derive_f(w(ab, "2211")).str() == "22");
  CHECK(derive_f(w(ab, "122112")).str() == "22");
  CHECK(derive_f(w(Alphabet(1, 3), "331113")).str() == "33");

  Word d = derive_f(w(ab, "12121"));
  CHECK(d.str() == "111");
  CHECK_FALSE(check_f_derivable(d).derivable);
  CHECK_THROWS_AS(derive_f(d), NotDerivable);

  const Alphabet a14(1, 4);
  Word u = w(a14, "4444111144441111444");
  Word du = derive_f(u);
  CHECK(du.str() == "44444");
  try {
    derive_f(du);
    FAIL("expected NotDerivable");
  } catch (const NotDerivable& e) {
    CHECK(e.report().offending_run_index == 0);
    CHECK(e.report().offending_exponent == 5);
    CHECK(e.op() == DerivationOp::F);
  }
}

TEST_CASE("derive_r examples") {
  const Alphabet ab(1, 2);
  CHECK(derive_r(w(ab, "21")).str() == "1");
  CHECK(derive_r(w(ab, "211")).str() == "12");
  CHECK(derive_r(w(ab, "2")).empty());
  CHECK(derive_r(Word(ab)).empty());

  // D^3(4^4 1^4 4^4 1^4 4^3) = D^2(4^4) = D(4) = ε
  const Alphabet a14(1, 4);
  Word u = w(a14, "4444111144441111444");
  Word d1 = derive_r(u);
  CHECK(d1.str() == "44444");
  CHECK_THROWS_AS(derive_r(d1), NotRDerivable);
}

TEST_CASE("derivations agree with the naive oracle") {
  std::mt19937_64 rng(testing::kSeed + 1);
  using testing::NaiveOp;
  const std::pair<DerivationOp, NaiveOp> ops[] = {
      {DerivationOp::F, NaiveOp::F},
      {DerivationOp::R, NaiveOp::R},
      {DerivationOp::Huang, NaiveOp::Huang}};
  for (const Alphabet& alph : testing::small_alphabets()) {
    for (int trial = 0; trial < 400; ++trial) {
      Word u = trial % 2 ? testing::random_word(rng, alph, rng() % 30)
                         : testing::random_run_word(rng, alph, rng() % 10,
                                                    alph.b() + 1);
      for (auto [op, naive] : ops) {
        auto expected = testing::naive_derive(alph, u.vec(), naive);
        if (expected) {
          CHECK(derive(op, u).vec() == *expected);
        } else {
          CHECK_THROWS_AS(derive(op, u), NotDerivable);
        }
      }
    }
  }
}

TEST_CASE("derivatives contract") {
  std::mt19937_64 rng(testing::kSeed + 2);
  for (const Alphabet& alph : testing::small_alphabets()) {
    for (int trial = 0; trial < 300; ++trial) {
      Word u = testing::random_run_word(rng, alph, 1 + rng() % 8, alph.b());
      if (check_f_derivable(u).derivable) {
        CHECK(derive_f(u).size() < u.size());
      }
      if (check_r_derivable(u).derivable) {
        CHECK(derive_r(u).size() < u.size());
      }
    }
  }
}

TEST_CASE("derive_f is complement invariant and reversal equivariant") {
  std::mt19937_64 rng(testing::kSeed + 3);
  for (const Alphabet& alph : testing::small_alphabets()) {
    for (int trial = 0; trial < 300; ++trial) {
      Word u = testing::random_run_word(rng, alph, 1 + rng() % 8, alph.b());
      if (!check_f_derivable(u).derivable) continue;
      // The exponent pattern ignores letters, so complementing u changes
      // nothing in the derivative.
      CHECK(derive_f(complement(u)) == derive_f(u));
      CHECK(derive_f(reversal(u)) == reversal(derive_f(u)));
    }
  }
}

TEST_CASE("huang agrees with f when a = b-1, exhaustive to length 14") {
  for (const Alphabet& alph :
       {Alphabet(1, 2), Alphabet(2, 3), Alphabet(3, 4)}) {
    std::vector<Letter> out_f, out_h;
    for (std::size_t n = 0; n <= 14; ++n) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<Letter> u(n);
        for (std::size_t i = 0; i < n; ++i) {
          u[i] = (mask >> i) & 1 ? alph.b() : alph.a();
        }
        const bool ok_f = detail::derive_f_into(alph, u, out_f);
        const bool ok_h = detail::derive_huang_into(alph, u, out_h);
        REQUIRE(ok_f == ok_h);
        if (ok_f) REQUIRE(out_f == out_h);
      }
    }
  }
}

TEST_CASE("huang disagrees with f when a < b-1 within length 2b+1") {
  for (const Alphabet& alph :
       {Alphabet(1, 3), Alphabet(1, 4), Alphabet(2, 4), Alphabet(2, 5),
        Alphabet(3, 6)}) {
    bool found = false;
    std::vector<Letter> out_f, out_h;
    const std::size_t max_len = 2 * alph.b() + 1;
    for (std::size_t n = 1; n <= max_len && !found; ++n) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n) && !found;
           ++mask) {
        std::vector<Letter> u(n);
        for (std::size_t i = 0; i < n; ++i) {
          u[i] = (mask >> i) & 1 ? alph.b() : alph.a();
        }
        const bool ok_f = detail::derive_f_into(alph, u, out_f);
        const bool ok_h = detail::derive_huang_into(alph, u, out_h);
        found = ok_f != ok_h || (ok_f && out_f != out_h);
      }
    }
    CHECK_MESSAGE(found, alph.str());
  }
}

TEST_CASE("not-derivable message names the run") {
  try {
    derive_f(w(Alphabet(1, 2), "111"));
    FAIL("expected NotDerivable");
  } catch (const NotDerivable& e) {
    CHECK(e.word() == "111");
    CHECK(std::string(e.what()).find("run 1 has exponent 3") !=
          std::string::npos);
  }
}
