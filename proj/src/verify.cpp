#include "smooth/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "parallel.hpp"
#include "smooth/bispecial.hpp"
#include "smooth/derivation.hpp"
#include "smooth/errors.hpp"
#include "smooth/generators.hpp"
#include "smooth/smoothness.hpp"
#include "smooth/spectral.hpp"

namespace smooth {

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "PASS";
    case Outcome::Fail: return "FAIL";
    case Outcome::Skip: return "SKIP";
  }
  return "?";
}

namespace {

struct CriterionInfo {
  const char* title;
  double budget;
};

constexpr CriterionInfo kCriteria[kCriterionCount] = {
    {"kappa prefixes", 1},
    {"derivation examples", 1},
    {"flawed derivative reproduction", 10},
    {"left embedding into r-smooth words", 60},
    {"bispecial tree fidelity", 30},
    {"complexity identities", 300},
    {"average length and p_i closed form", 60},
    {"even alphabets: l_i = L_i", 60},
    {"odd alphabets: l_i, V-recurrence, L_i vs l_(i+1)", 120},
    {"spectral radii and exponent table", 5},
    {"coupled pair over {1,3}", 1},
    {"aperiodicity of kappa prefixes", 5},
};

class Checks {
 public:
  Checks(const VerifyOptions& options, std::vector<Alphabet> defaults)
      : options_(options) {
    if (options.alphabet) {
      scope_ = {*options.alphabet};
    } else {
      scope_ = std::move(defaults);
    }
  }

  // Alphabets the per-alphabet checks should cover.
  const std::vector<Alphabet>& scope() const { return scope_; }

  // Fixed examples run only when their alphabet is in scope.
  bool applies(const Alphabet& alph) const {
    return std::find(scope_.begin(), scope_.end(), alph) != scope_.end();
  }

  void add(std::string name, bool passed, std::string detail = {}) {
    results_.push_back({std::move(name), passed, std::move(detail)});
  }

  // Runs fn, turning an escaping exception into a failed check.
  void guard(const std::string& name, const std::function<void()>& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      add(name, false, std::string("exception: ") + e.what());
    }
  }

  unsigned threads() const { return options_.threads; }
  std::uint64_t seed() const { return options_.seed; }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  const VerifyOptions& options_;
  std::vector<Alphabet> scope_;
  std::vector<CheckResult> results_;
};

std::string str_of(const Alphabet& alph, std::span<const Letter> u) {
  return render(alph, u);
}

const Alphabet k12{1, 2};
const Alphabet k13{1, 3};
const Alphabet k14{1, 4};
const Alphabet k24{2, 4};
const Alphabet k25{2, 5};
const Alphabet k26{2, 6};
const Alphabet k35{3, 5};

// ---------------------------------------------------------------- 1

struct KappaDisplay {
  Alphabet alphabet;
  Letter start;
  const char* text;
};

const KappaDisplay kKappaDisplays[] = {
    {k12, 2, "221121221221121122121121221121121221221121221211211221221121"},
    {k13, 3, "333111333131333111333133313331113331313331113331333111333133"},
    {k24, 2, "224422224444224422442222444422224444224422224444224422224444"},
    {k25, 2, "225522222555552255225522555552222255555222225555522552222255"},
};

void criterion_kappa(Checks& c) {
  for (const auto& d : kKappaDisplays) {
    if (!c.applies(d.alphabet)) continue;
    const std::string want = d.text;
    const std::string got =
        kappa_prefix(d.alphabet, d.start, want.size()).str();
    c.add("kappa_" + std::to_string(d.start) + "," +
              std::to_string(d.alphabet.complement(d.start)) + " first " +
              std::to_string(want.size()) + " letters",
          got == want, got == want ? "" : "got " + got);
  }
  // Self-description: the derivative of a prefix is a prefix of the word.
  for (const auto& alph : c.scope()) {
    for (Letter start : {alph.a(), alph.b()}) {
      Word w = kappa_prefix(alph, start, 2000);
      auto d = derive_prefix(w);
      bool ok = d && d->size() <= w.size() &&
                std::equal(d->letters().begin(), d->letters().end(),
                           w.letters().begin());
      c.add("kappa " + alph.str() + " start " + std::to_string(start) +
                " is its own derivative on 2000 letters",
            ok);
    }
  }
}

// ---------------------------------------------------------------- 2

void criterion_derive(Checks& c) {
  auto expect_f = [&](const Alphabet& alph, const char* in, const char* out) {
    if (!c.applies(alph)) return;
    c.guard(std::string("D_f(") + in + ")", [&] {
      Word got = derive_f(Word::parse(alph, in));
      c.add(std::string("D_f(") + in + ") = " + out + " over " + alph.str(),
            got.str() == out, "got " + got.str());
    });
  };
  auto expect_r = [&](const Alphabet& alph, const char* in, const char* out) {
    if (!c.applies(alph)) return;
    c.guard(std::string("D_r(") + in + ")", [&] {
      Word got = derive_r(Word::parse(alph, in));
      c.add(std::string("D_r(") + in + ") = " + out + " over " + alph.str(),
            got.str() == out, "got " + got.str());
    });
  };
  expect_f(k12, "2211", "22");
  expect_f(k12, "122112", "22");
  expect_f(k13, "331113", "33");
  expect_r(k12, "21", "1");
  expect_r(k12, "211", "12");

  if (c.applies(k12)) {
    auto h = f_height(Word::parse(k12, "221121221"));
    c.add("height(221121221) = 4", h && *h == 4,
          h ? "got " + std::to_string(*h) : "not f-smooth");

    Word w = Word::parse(k12, "12121");
    bool rejected = !is_f_smooth(w);
    std::string detail;
    try {
      derive_f(derive_f(w));
      rejected = false;
      detail = "second derivative succeeded";
    } catch (const NotDerivable& e) {
      detail = e.what();
      rejected = rejected && e.word() == "111";
    }
    c.add("12121 rejected at step 2 (111 not derivable)", rejected, detail);
  }

  // Generic: derivatives of f-smooth words are f-smooth, and f-smooth words
  // are closed under complement and reversal.
  for (const auto& alph : c.scope()) {
    bool ok = true;
    std::string bad;
    for (const auto& level : enumerate_f_smooth_upto(alph, 10)) {
      for (const auto& u : level) {
        if (!is_f_smooth(derive_f(u)) || !is_f_smooth(complement(u)) ||
            !is_f_smooth(reversal(u))) {
          ok = false;
          bad = u.str();
        }
      }
    }
    c.add("closure of C_f^inf up to length 10 over " + alph.str(), ok, bad);
  }
}

// ---------------------------------------------------------------- 3

void criterion_mistake(Checks& c) {
  if (c.applies(k14)) {
    c.guard("{1,4} counterexample", [&] {
      const Run runs[] = {{4, 4}, {1, 4}, {4, 4}, {1, 4}, {4, 3}};
      Word w = Word::from_runs(k14, runs);
      Word cur = w;
      std::size_t steps = 0;
      std::string chain = cur.str();
      while (!cur.empty() && steps < 10) {
        cur = derive_huang(cur);
        ++steps;
        chain += " -> " + (cur.empty() ? std::string("ε") : cur.str());
      }
      c.add("flawed derivative takes 4^4 1^4 4^4 1^4 4^3 to ε in 3 steps",
            cur.empty() && steps == 3, chain);

      Word d = derive_f(w);
      c.add("D_f(4^4 1^4 4^4 1^4 4^3) = 4^5", d == Word::power(k14, 4, 5),
            "got " + d.str());
      c.add("4^5 is not derivable", !check_f_derivable(d).derivable);
      c.add("4^4 1^4 4^4 1^4 4^3 is not f-smooth", !is_f_smooth(w));
    });
  }

  // The two operators agree on every word when a = b-1.
  for (const auto& alph : c.scope()) {
    if (alph.a() + 1 != alph.b()) continue;
    const std::size_t max_len = 14;
    std::atomic<std::uint64_t> mismatches{0};
    std::uint64_t total = 0;
    for (std::size_t n = 0; n <= max_len; ++n) {
      const std::uint64_t count = std::uint64_t{1} << n;
      total += count;
      detail::parallel_chunks(
          count, c.threads(),
          [&](std::size_t begin, std::size_t end, std::size_t) {
            std::vector<Letter> u(n), x, y;
            for (std::size_t code = begin; code < end; ++code) {
              for (std::size_t k = 0; k < n; ++k) {
                u[k] = (code >> k) & 1 ? alph.b() : alph.a();
              }
              const bool fx = detail::derive_f_into(alph, u, x);
              const bool fy = detail::derive_huang_into(alph, u, y);
              if (fx != fy || (fx && x != y)) ++mismatches;
            }
          },
          4096);
    }
    c.add("flawed and correct derivative agree on all " +
              std::to_string(total) + " words of length <= 14 over " +
              alph.str(),
          mismatches == 0, std::to_string(mismatches.load()) + " mismatches");
  }
}

// ---------------------------------------------------------------- 4

void criterion_embedding(Checks& c) {
  for (const auto& alph : c.scope()) {
    const std::size_t max_len = alph == k12 ? 12 : 10;
    std::vector<Word> words;
    for (auto& level : enumerate_f_smooth_upto(alph, max_len)) {
      words.insert(words.end(), level.begin(), level.end());
    }
    const std::size_t chunks = detail::chunk_count(words.size(), c.threads(), 8);
    std::vector<std::string> failures(chunks);
    detail::parallel_chunks(
        words.size(), c.threads(),
        [&](std::size_t begin, std::size_t end, std::size_t k) {
          for (std::size_t j = begin; j < end && failures[k].empty(); ++j) {
            const Word& u = words[j];
            try {
              EmbeddingWitness wit = embed_left(u);
              if (wit.left_extension.size() <
                      static_cast<std::size_t>(alph.a()) + alph.b() ||
                  !is_r_smooth(wit.combined)) {
                failures[k] = u.str() + ": witness fails";
                continue;
              }
              Word ext = build_smooth_from_r(wit.combined,
                                             wit.combined.size() + 50);
              for (std::size_t m = 0; m <= ext.size(); ++m) {
                if (!detail::is_r_smooth(alph, ext.letters().first(m))) {
                  failures[k] = u.str() + ": extension prefix " +
                                std::to_string(m) + " not r-smooth";
                  break;
                }
              }
            } catch (const std::exception& e) {
              failures[k] = u.str() + ": " + e.what();
            }
          }
        },
        8);
    std::string bad;
    for (const auto& f : failures) {
      if (!f.empty()) bad = f;
    }
    c.add("embed_left + 50-letter r-smooth extension for all " +
              std::to_string(words.size()) + " f-smooth words of length <= " +
              std::to_string(max_len) + " over " + alph.str(),
          bad.empty(), bad);
  }
}

// ---------------------------------------------------------------- 5

const std::vector<std::set<std::string>> kExpectedGenerations = {
    {""},
    {"21", "12"},
    {"21121", "12212", "21221", "12112"},
    {"211212212", "122121121", "2122112112", "1211221221", "2112112212",
     "1221221121", "212212112", "121121221"},
};

void criterion_tree(Checks& c) {
  if (c.applies(k12)) {
    for (std::size_t i = 0; i < kExpectedGenerations.size(); ++i) {
      std::set<std::string> got;
      for (const auto& node : tree_generation(k12, Family::T, i)) {
        got.insert(node.word.str());
      }
      std::string detail;
      for (const auto& w : got) detail += (w.empty() ? "ε" : w) + " ";
      c.add("generation " + std::to_string(i) + " of T over {1,2}",
            got == kExpectedGenerations[i], detail);
    }
  }
  for (const auto& alph : c.scope()) {
    for (Family f : families(alph)) {
      std::uint64_t edges = 0;
      std::string bad;
      std::vector<Letter> d;
      walk_tree(alph, f, 10,
                [&](std::span<const Letter> w, std::span<const Letter> parent,
                    std::size_t g) {
                  if (g == 0) return true;
                  ++edges;
                  if (!detail::derive_f_into(alph, w, d) ||
                      !std::equal(d.begin(), d.end(), parent.begin(),
                                  parent.end())) {
                    if (bad.empty()) bad = str_of(alph, w);
                  }
                  return true;
                });
      c.add("derive_f(child) = parent on " + std::to_string(edges) +
                " edges of " + to_string(f) + " over " + alph.str() +
                ", generations <= 10",
            bad.empty(), bad);
    }
  }
}

// ---------------------------------------------------------------- 6

void criterion_complexity(Checks& c) {
  for (const auto& alph : c.scope()) {
    c.guard("complexity over " + alph.str(), [&] {
      ComplexityOptions opts;
      opts.threads = c.threads();
      opts.bispecial_horizon = 25;
      ComplexityTable t = exact_complexity(alph, 40, opts);

      std::string bad;
      for (const auto& row : t.rows) {
        if (row.bispecial_sum && *row.bispecial_sum != row.b && bad.empty()) {
          bad = "n=" + std::to_string(row.n) + ": b=" + std::to_string(row.b) +
                " sum=" + std::to_string(*row.bispecial_sum);
        }
      }
      c.add("b(n) = sum of multiplicities, n <= 25, over " + alph.str(),
            bad.empty(), bad);

      bad.clear();
      for (const auto& row : t.rows) {
        if ((row.p < row.lower_bound || row.p > row.upper_bound) &&
            bad.empty()) {
          bad = "n=" + std::to_string(row.n) + ": " +
                std::to_string(row.lower_bound) + " <= " +
                std::to_string(row.p) + " <= " +
                std::to_string(row.upper_bound) + " fails";
        }
      }
      c.add("1+n+p(n) <= p_exact(n) <= 1+n+3p(n), n <= 40, over " + alph.str(),
            bad.empty(), bad);

      if (alph == k12 || alph == k13) {
        bad.clear();
        std::size_t first = 0;
        std::size_t count = 0;
        for (const auto& row : t.rows) {
          if (row.p != row.lower_bound) {
            if (count++ == 0) first = row.n;
          }
        }
        if (count > 0) {
          const auto& row = t.rows[first];
          bad = std::to_string(count) + " of 41 rows differ, first n=" +
                std::to_string(first) + ": p_exact=" + std::to_string(row.p) +
                " vs 1+n+p(n)=" + std::to_string(row.lower_bound);
        }
        c.add("p_exact(n) = 1+n+p(n), n <= 40, over " + alph.str(),
              count == 0, bad);
      }

      if (alph.a() + 1 < alph.b()) {
        ComplexityTable tree = tree_derived_complexity(alph, 40, opts);
        bad.clear();
        for (std::size_t n = 0; n <= 40; ++n) {
          if (tree.rows[n].p != t.rows[n].p && bad.empty()) {
            bad = "n=" + std::to_string(n) + ": trees give " +
                  std::to_string(tree.rows[n].p) + ", enumeration " +
                  std::to_string(t.rows[n].p);
          }
        }
        c.add("p_exact = 1+n+p+p1+p2-p3-p4, n <= 40, over " + alph.str(),
              bad.empty(), bad);
      }
    });
  }
}

// ---------------------------------------------------------------- 7

void criterion_average(Checks& c) {
  for (const auto& alph : c.scope()) {
    c.guard("average length over " + alph.str(), [&] {
      TreeOptions opts;
      opts.threads = c.threads();
      auto stats = generation_stats_upto(alph, Family::T, 10, opts);
      std::string bad;
      for (const auto& s : stats) {
        const std::uint64_t want = average_length_total(alph, s.generation);
        if (s.total_len != want && bad.empty()) {
          bad = "i=" + std::to_string(s.generation) + ": enumeration " +
                std::to_string(s.total_len) + ", formula " +
                std::to_string(want);
        }
      }
      c.add("f(i) = c(a+b)^i - c2^i, i <= 10, over " + alph.str(), bad.empty(),
            bad);

      bad.clear();
      std::size_t compared = 0;
      for (std::size_t i = 0; i <= 8; ++i) {
        const auto& s = stats[i];
        const std::size_t horizon = s.max_len + 25;
        GenerationContribution g =
            contribution_from_histogram(s.length_histogram, horizon);
        for (std::size_t n = s.max_len + 1; n <= horizon; ++n) {
          ++compared;
          const std::int64_t want = closed_form_contribution(alph, i, n);
          if (g.p[n] != want && bad.empty()) {
            bad = "i=" + std::to_string(i) + " n=" + std::to_string(n) +
                  ": " + std::to_string(g.p[n]) + " vs " +
                  std::to_string(want);
          }
        }
      }
      c.add("p_i(n) = (n+c-1)2^i - c(a+b)^i for n in (L_i, L_i+25], i <= 8, "
                "over " + alph.str() + " (" + std::to_string(compared) +
                " values)",
            bad.empty(), bad);
    });
  }
}

// ---------------------------------------------------------------- 8

void criterion_even(Checks& c) {
  for (const auto& alph : c.scope()) {
    if (!alph.is_even()) continue;
    c.guard("even alphabet " + alph.str(), [&] {
      TreeOptions opts;
      opts.threads = c.threads();
      auto stats = generation_stats_upto(alph, Family::T, 8, opts);
      const std::uint64_t half = (alph.a() + alph.b()) / 2;
      std::string bad;
      std::uint64_t pw = 1;
      for (const auto& s : stats) {
        // c((a+b)/2)^i - c with c = 4a/(a+b-2), kept in integers.
        const std::uint64_t want =
            4 * alph.a() * (pw - 1) / (alph.a() + alph.b() - 2);
        if ((s.min_len != want || s.max_len != want) && bad.empty()) {
          bad = "i=" + std::to_string(s.generation) + ": l=" +
                std::to_string(s.min_len) + " L=" + std::to_string(s.max_len) +
                " formula " + std::to_string(want);
        }
        pw *= half;
      }
      c.add("l_i = L_i = c((a+b)/2)^i - c, i <= 8, over " + alph.str(),
            bad.empty(), bad);

      bad.clear();
      std::uint64_t words = 0;
      walk_tree(alph, Family::T, 8,
                [&](std::span<const Letter> w, std::span<const Letter>,
                    std::size_t) {
                  ++words;
                  if (2 * count_letter(w, alph.a()) != w.size() &&
                      bad.empty()) {
                    bad = "unbalanced word of length " +
                          std::to_string(w.size());
                  }
                  return true;
                });
      c.add("|u|_a = |u|_b on all " + std::to_string(words) +
                " words of T up to generation 8 over " + alph.str(),
            bad.empty(), bad);
    });
  }
}

// ---------------------------------------------------------------- 9

void criterion_odd(Checks& c) {
  std::mt19937_64 rng(c.seed());
  for (const auto& alph : c.scope()) {
    if (!alph.is_odd()) continue;
    c.guard("odd alphabet " + alph.str(), [&] {
      // {1,3} goes one generation further for the L_i vs l_(i+1) check.
      const std::size_t gens = alph == k13 ? 11 : 8;
      TreeOptions opts;
      opts.threads = c.threads();
      auto stats = generation_stats_upto(alph, Family::T, gens, opts);
      const std::size_t li_max = alph == k13 ? 10 : gens;

      std::string bad;
      std::string n1_bad;
      Word iter(alph);
      for (std::size_t i = 0; i <= li_max; ++i) {
        if (stats[i].min_len != iter.size() && bad.empty()) {
          bad = "i=" + std::to_string(i) + ": l_i=" +
                std::to_string(stats[i].min_len) + " |P^i(ε)|=" +
                std::to_string(iter.size());
        }
        // Summation form gives l_i exactly; the single term bounds it.
        const Rational sum = l1_norm(iterated_count_vector(alph, i));
        if (sum != Rational(static_cast<std::int64_t>(stats[i].min_len)) &&
            n1_bad.empty()) {
          n1_bad = "i=" + std::to_string(i) + ": |sum M^j N| = " + sum.str();
        }
        if (i >= 1) {
          const Rational term = l1_norm(leading_count_term(alph, i));
          if (term > Rational(static_cast<std::int64_t>(stats[i].min_len)) &&
              n1_bad.empty()) {
            n1_bad = "i=" + std::to_string(i) + ": |M^(i-1) N| = " +
                     term.str() + " exceeds l_i";
          }
        }
        iter = primitive(iter, alph.a());
      }
      c.add("l_i = |P_{f,a}^i(ε)|, i <= " + std::to_string(li_max) +
                ", over " + alph.str(),
            bad.empty(), bad);
      c.add("l_i = |sum_{j<i} M^j N| and l_i >= |M^(i-1) N|, over " +
                alph.str(),
            n1_bad.empty(), n1_bad);

      OddMatrices mats = build_matrices(alph);
      const std::vector<Rational> n = mats.N.column(0);
      std::uniform_int_distribution<int> len_dist(0, 20);
      std::bernoulli_distribution coin(0.5);
      bad.clear();
      const int samples = 500;
      for (int s = 0; s < samples; ++s) {
        const std::size_t len = 2 * static_cast<std::size_t>(len_dist(rng));
        std::vector<Letter> letters(len);
        for (auto& x : letters) x = coin(rng) ? alph.b() : alph.a();
        Word u(alph, letters);
        auto va = parity_vector(primitive(u, alph.a()));
        auto vb = parity_vector(primitive(u, alph.b()));
        auto mv = mats.M.apply(parity_vector(u));
        for (std::size_t k = 0; k < 4; ++k) mv[k] += n[k];
        if ((va != mv || vb != mats.P.apply(va)) && bad.empty()) {
          bad = u.str();
        }
      }
      c.add("V(P_a(u)) = M V(u) + N and V(P_b(u)) = P V(P_a(u)) on " +
                std::to_string(samples) + " random even-length words over " +
                alph.str(),
            bad.empty(), bad);

      LowerBoundConstants lb = lower_bound_constants(alph, li_max);
      c.add("l_i >= C lambda^i - D - 1 with C=" + format_fixed(lb.C, 6) +
                " D=" + format_fixed(lb.D, 6) + " over " + alph.str(),
            true);

      if (alph == k13) {
        c.add("L_5 = 86 over {1,3}", stats[5].max_len == 86,
              "got " + std::to_string(stats[5].max_len));
        c.add("l_6 = 64 over {1,3}", stats[6].min_len == 64,
              "got " + std::to_string(stats[6].min_len));
        bad.clear();
        for (std::size_t i = 5; i <= 10; ++i) {
          if (stats[i].max_len <= stats[i + 1].min_len && bad.empty()) {
            bad = "i=" + std::to_string(i) + ": L_i=" +
                  std::to_string(stats[i].max_len) + " l_(i+1)=" +
                  std::to_string(stats[i + 1].min_len);
          }
        }
        c.add("L_i > l_(i+1) for 5 <= i <= 10 over {1,3}", bad.empty(), bad);
      }
    });
  }
}

// ---------------------------------------------------------------- 10

struct ReferenceColumn {
  Letter a, b;
  const char* rho;
  const char* zeta;
  const char* beta;
};

// Reference values at their displayed precision.
const ReferenceColumn kReferenceTable[] = {
    {1, 3, "2", "2.44", "7.129"},      {1, 5, "1.63", "2", "7.658"},
    {3, 5, "1.5", "1.51", "2.96"},     {1, 7, "1.5", "1.831", "8.193"},
    {3, 7, "1.431", "1.44", "3.195"},  {5, 7, "1.387", "1.388", "2.6"},
    {1, 9, "1.431", "1.74", "8.565"},  {3, 9, "1.387", "1.397", "3.383"},
    {5, 9, "1.356", "1.358", "2.734"},
};

// Within one unit of the last displayed digit.
bool matches_display(double value, const std::string& shown) {
  const auto dot = shown.find('.');
  const int decimals =
      dot == std::string::npos ? 0 : static_cast<int>(shown.size() - dot - 1);
  const double scale = std::pow(10.0, decimals);
  const long long got = std::llround(value * scale);
  const long long want = std::llround(std::stod(shown) * scale);
  return std::llabs(got - want) <= 1;
}

void criterion_spectral(Checks& c) {
  for (Letter b : {3u, 5u, 7u, 9u}) {
    Alphabet alph(1, b);
    if (!c.applies(alph)) continue;
    c.guard("lambda over " + alph.str(), [&] {
      const double closed = lambda_of(alph);
      const double radius = spectral_radius(*build_matrices(alph).R);
      c.add("(1+sqrt(2b-1))/2 = radius(R) over " + alph.str(),
            std::abs(closed - radius) < 1e-8,
            format_fixed(closed, 12) + " vs " + format_fixed(radius, 12));
    });
  }
  for (auto [a, b] : {std::pair<Letter, Letter>{3, 5}, {3, 7}, {5, 7}}) {
    Alphabet alph(a, b);
    if (!c.applies(alph)) continue;
    c.guard("cubic root over " + alph.str(), [&] {
      const double root = lambda_of(alph);
      const double radius = spectral_radius(build_matrices(alph).M);
      c.add("dominant cubic root = radius(M) over " + alph.str(),
            std::abs(root - radius) < 1e-8,
            format_fixed(root, 12) + " vs " + format_fixed(radius, 12));
    });
  }
  const auto table = comparison_table();
  for (std::size_t k = 0; k < table.size(); ++k) {
    const auto& col = table[k];
    const auto& ref = kReferenceTable[k];
    if (!c.applies(col.alphabet)) continue;
    const std::pair<const char*, std::pair<double, const char*>> cells[] = {
        {"rho", {col.rho.value, ref.rho}},
        {"zeta", {col.zeta.value, ref.zeta}},
        {"beta", {col.beta.value, ref.beta}},
    };
    for (const auto& [name, cell] : cells) {
      const auto& [value, shown] = cell;
      c.add(std::string(name) + " " + col.alphabet.str() + " = " + shown,
            matches_display(value, shown),
            "computed " + format_fixed(value, 5));
    }
  }
}

// ---------------------------------------------------------------- 11

void criterion_pair(Checks& c) {
  const char* x_display =
      "1113111313111311131311131311131113131113111313111313111311131311131";
  const char* y_display =
      "3131113131113111313111313111311131311131113131113131113111313111313";
  for (const auto& alph : c.scope()) {
    if (alph.a() != 1 || alph.b() % 2 == 0) continue;
    c.guard("coupled pair over " + alph.str(), [&] {
      if (alph == k13) {
        auto [x, y] = coupled_pair_prefix(alph, 67);
        c.add("first member, 67 letters", x.str() == x_display,
              "got " + x.str());
        c.add("second member, 67 letters", y.str() == y_display,
              "got " + y.str());
      }
      auto [x, y] = coupled_pair_prefix(alph, 5000);
      const std::vector<Letter> bb{alph.b(), alph.b()};
      auto has_bb = [&](const Word& w) {
        return std::search(w.letters().begin(), w.letters().end(), bb.begin(),
                           bb.end()) != w.letters().end();
      };
      c.add("no factor bb in 5000 letters of either member over " + alph.str(),
            !has_bb(x) && !has_bb(y));
      auto dx = derive_prefix(x);
      auto dy = derive_prefix(y);
      auto is_prefix = [](const std::optional<Word>& d, const Word& w) {
        return d && d->size() <= w.size() &&
               std::equal(d->letters().begin(), d->letters().end(),
                          w.letters().begin());
      };
      c.add("D(x) = y and D(y) = x on the overlap over " + alph.str(),
            is_prefix(dx, y) && is_prefix(dy, x),
            dx && dy ? "overlaps " + std::to_string(dx->size()) + ", " +
                           std::to_string(dy->size())
                     : "not derivable");
    });
  }
}

// ---------------------------------------------------------------- 12

void criterion_aperiodic(Checks& c) {
  const std::pair<Alphabet, Letter> defaults[] = {{k12, 2}, {k13, 3}, {k24, 2}};
  std::vector<std::pair<Alphabet, Letter>> runs;
  if (c.scope().size() == 1 && !c.applies(k12) && !c.applies(k13) &&
      !c.applies(k24)) {
    const Alphabet alph = c.scope()[0];
    runs = {{alph, alph.a()}, {alph, alph.b()}};
  } else {
    for (const auto& d : defaults) {
      if (c.applies(d.first)) runs.push_back(d);
    }
  }
  for (const auto& [alph, start] : runs) {
    Word w = kappa_prefix(alph, start, 5000);
    const std::size_t p = smallest_period(w.letters(), 100);
    const std::size_t q =
        smallest_period(w.letters().subspan(2500), 100);
    c.add("kappa " + alph.str() + " start " + std::to_string(start) +
              ": no period <= 100 on 5000 letters",
          p == 0, "period " + std::to_string(p));
    c.add("kappa " + alph.str() + " start " + std::to_string(start) +
              ": no period <= 100 on letters 2500..5000",
          q == 0, "period " + std::to_string(q));
  }
}

std::vector<Alphabet> default_scope(int id) {
  switch (id) {
    case 1: return {k12, k13, k24, k25};
    case 2: return {k12, k13};
    case 3: return {k12, k14};
    case 4: return {k12, k13, k14};
    case 5: return {k12, k13};
    case 6: return {k12, k13, k24, k14};
    case 7: return {k12, k13, k24};
    case 8: return {k24, k26};
    case 9: return {k13, k35};
    case 10: {
      std::vector<Alphabet> out;
      for (const auto& r : kReferenceTable) out.emplace_back(r.a, r.b);
      return out;
    }
    case 11: return {k13};
    case 12: return {k12, k13, k24};
  }
  return {};
}

void dispatch(int id, Checks& c) {
  switch (id) {
    case 1: criterion_kappa(c); break;
    case 2: criterion_derive(c); break;
    case 3: criterion_mistake(c); break;
    case 4: criterion_embedding(c); break;
    case 5: criterion_tree(c); break;
    case 6: criterion_complexity(c); break;
    case 7: criterion_average(c); break;
    case 8: criterion_even(c); break;
    case 9: criterion_odd(c); break;
    case 10: criterion_spectral(c); break;
    case 11: criterion_pair(c); break;
    case 12: criterion_aperiodic(c); break;
  }
}

}  // namespace

std::string criterion_title(int id) {
  if (id < 1 || id > kCriterionCount) {
    throw std::invalid_argument("no criterion " + std::to_string(id));
  }
  return kCriteria[id - 1].title;
}

double criterion_budget_seconds(int id) {
  if (id < 1 || id > kCriterionCount) {
    throw std::invalid_argument("no criterion " + std::to_string(id));
  }
  return kCriteria[id - 1].budget;
}

CriterionResult run_criterion(int id, const VerifyOptions& options) {
  CriterionResult r;
  r.id = id;
  r.title = criterion_title(id);
  r.budget_seconds = criterion_budget_seconds(id);

  Checks checks(options, default_scope(id));
  const auto start = std::chrono::steady_clock::now();
  checks.guard("criterion " + std::to_string(id), [&] { dispatch(id, checks); });
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            start)
                  .count();
  r.checks = checks.take();

  if (r.checks.empty()) {
    r.outcome = Outcome::Skip;
    return r;
  }
  if (r.seconds > r.budget_seconds) {
    r.checks.push_back({"runtime within budget", false,
                        format_fixed(r.seconds, 2) + " s"});
  }
  const bool ok = std::all_of(r.checks.begin(), r.checks.end(),
                              [](const CheckResult& x) { return x.passed; });
  r.outcome = ok ? Outcome::Pass : Outcome::Fail;
  return r;
}

namespace {

const std::map<std::string, std::vector<int>, std::less<>> kSuites = {
    {"all", {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}},
    {"kappa", {1}},
    {"derive", {2}},
    {"mistake", {3}},
    {"th1", {4}},
    {"tree", {5}},
    {"p3p", {6}},
    {"avti", {7}},
    {"evenli", {8}},
    {"oddli", {9}},
    {"table", {10}},
    {"pair", {11}},
    {"aperiodic", {12}},
};

}  // namespace

std::vector<int> suite_criteria(std::string_view suite) {
  if (auto it = kSuites.find(suite); it != kSuites.end()) return it->second;
  int id = 0;
  for (char ch : suite) {
    if (ch < '0' || ch > '9' || id > kCriterionCount) {
      id = -1;
      break;
    }
    id = id * 10 + (ch - '0');
  }
  if (id >= 1 && id <= kCriterionCount) return {id};
  throw std::invalid_argument("unknown verify suite '" + std::string(suite) +
                              "'");
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, ids] : kSuites) out.push_back(name);
  return out;
}

std::string format_result(const CriterionResult& r, bool verbose) {
  std::ostringstream os;
  os << to_string(r.outcome) << "  [" << r.id << "] " << r.title << " ("
     << format_fixed(r.seconds, 2) << " s / " << r.budget_seconds << " s)\n";
  for (const auto& ch : r.checks) {
    if (!verbose && ch.passed) continue;
    os << "      " << (ch.passed ? "ok   " : "FAIL ") << ch.name;
    if (!ch.detail.empty() && (!ch.passed || verbose)) {
      os << " -- " << ch.detail;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace smooth
