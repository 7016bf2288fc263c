#pragma once

// f-primitives, bispecial f-smooth words, the five bispecial trees and the
// factor complexity bookkeeping built on them.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "smooth/alphabet.hpp"

namespace smooth {

// T is rooted at ε. T1..T4 exist only when a < b-1 and are rooted at a^a,
// b^a (strong) and a^(b-1), b^(b-1) (weak).
enum class Family { T, T1, T2, T3, T4 };

const char* to_string(Family f);
std::optional<Family> parse_family(std::string_view text);

enum class BispecialKind { Weak = -1, Neutral = 0, Strong = 1, NotBispecial = 2 };

const char* to_string(BispecialKind k);

struct BispecialNode {
  Word word;
  Family family;
  std::size_t generation;
  int multiplicity;
};

// P_{f,a}(u) = a^a b^{u1} a^{u2} ... closed by a run of length a;
// P_{f,b}(u) is its complement. derive_f(primitive(u, c)) == u.
Word primitive(const Word& u, Letter c);

namespace detail {
void primitive_into(const Alphabet& alphabet, std::span<const Letter> u,
                    Letter c, std::vector<Letter>& out);
}

// a·u, b·u, u·a and u·b all f-smooth.
bool is_bispecial(const Word& u);
// |{aua, aub, bua, bub} ∩ C_f^inf| - 3. Throws std::invalid_argument when u
// is not bispecial.
int multiplicity(const Word& u);
// Combined probe: NotBispecial or the sign of the multiplicity.
BispecialKind bispecial_kind(const Word& u);

struct ShortBispecial {
  Word word;
  BispecialKind kind;
};

// Every short f-smooth word (ε, then c^n for c in {a,b}, 1 <= n <= b) with
// its kind, decided by probing.
std::vector<ShortBispecial> classify_short_bispecials(const Alphabet& alphabet);

// The families available over `alphabet`: {T} when a = b-1, all five
// otherwise.
std::vector<Family> families(const Alphabet& alphabet);
// Throws InvalidFamily for T1..T4 when a = b-1.
Word family_root(const Alphabet& alphabet, Family family);
int family_multiplicity(Family family);

struct TreeOptions {
  std::size_t max_generation = 20;
  // Debug hook: probe every generated word for bispeciality and the
  // family's multiplicity. Off by default; the reduction lemma makes it
  // redundant.
  bool verify_bispecial = false;
  unsigned threads = 0;
};

// The 2^i words of generation i, listed breadth-first with the a-child
// before the b-child.
std::vector<BispecialNode> tree_generation(const Alphabet& alphabet,
                                           Family family, std::size_t i,
                                           const TreeOptions& options = {});

// Depth-first visit of generations 0..max_generation. visit(word, parent,
// generation) returns false to skip the subtree. parent is empty for the
// root.
using TreeVisitor = std::function<bool(std::span<const Letter> word,
                                       std::span<const Letter> parent,
                                       std::size_t generation)>;
void walk_tree(const Alphabet& alphabet, Family family,
               std::size_t max_generation, const TreeVisitor& visit);

struct GenerationStats {
  std::size_t generation = 0;
  std::uint64_t count = 0;
  std::size_t min_len = 0;   // l_i
  std::size_t max_len = 0;   // L_i
  std::uint64_t total_len = 0;  // f(i)
  std::map<std::size_t, std::uint64_t> length_histogram;  // b_i
};

GenerationStats generation_stats(const Alphabet& alphabet, Family family,
                                 std::size_t i,
                                 const TreeOptions& options = {});
// Stats for generations 0..max_i in one walk.
std::vector<GenerationStats> generation_stats_upto(
    const Alphabet& alphabet, Family family, std::size_t max_i,
    const TreeOptions& options = {});

// f(i) = c (a+b)^i - c 2^i with c = 4a/(a+b-2), in exact integers.
std::uint64_t average_length_total(const Alphabet& alphabet, std::size_t i);
// p_i(n) = (n + c - 1) 2^i - c (a+b)^i, valid for n > L_i.
std::int64_t closed_form_contribution(const Alphabet& alphabet, std::size_t i,
                                      std::size_t n);

struct RootInfo {
  Word root;
  Family family;
  std::size_t generation;
};

// Derives a bispecial word down to its short root. Throws
// std::invalid_argument if u is not bispecial or its root is neutral.
RootInfo root_of(const Word& u);

// g(u) = P_{f, complement(u1)}(complement(derive_f(u))), swapping the
// halves of a generation by first letter. Precondition: u nonempty and in
// C_f^1.
Word generation_bijection(const Word& u);

// b_i, s_i, p_i for n = 0..horizon.
struct GenerationContribution {
  std::vector<std::int64_t> b;
  std::vector<std::int64_t> s;
  std::vector<std::int64_t> p;
};

GenerationContribution contribution_from_histogram(
    const std::map<std::size_t, std::uint64_t>& histogram, std::size_t horizon);

struct TreeComplexity {
  Family family;
  std::size_t horizon = 0;
  // Indexed [generation][n]; only generations with a word of length
  // <= horizon are listed.
  std::vector<GenerationContribution> generations;
  std::vector<std::int64_t> total;  // p(n) = sum_i p_i(n)
};

TreeComplexity tree_complexity(const Alphabet& alphabet, Family family,
                               std::size_t horizon,
                               const TreeOptions& options = {});

enum class Provenance { BruteForce, TreeDerived };

const char* to_string(Provenance p);

struct ComplexityRow {
  std::size_t n = 0;
  std::int64_t p = 0;
  std::int64_t s = 0;
  std::int64_t b = 0;
  std::int64_t lower_bound = 0;  // 1 + n + p_T(n)
  std::int64_t upper_bound = 0;  // 1 + n + 3 p_T(n)
  std::optional<std::int64_t> bispecial_sum;  // sum of m(u) over BS(n)
};

struct ComplexityTable {
  Alphabet alphabet;
  Provenance provenance;
  std::vector<ComplexityRow> rows;
};

struct ComplexityOptions {
  std::size_t max_length = 64;
  // Rows n <= bispecial_horizon also carry the sum of multiplicities of the
  // bispecial words of length n, found by probing enumerated words.
  std::size_t bispecial_horizon = 25;
  unsigned threads = 0;
};

// p(n) by exhaustive enumeration for n = 0..N.
ComplexityTable exact_complexity(const Alphabet& alphabet, std::size_t N,
                                 const ComplexityOptions& options = {});

// p(n) = 1 + n + p(n) + p1(n) + p2(n) - p3(n) - p4(n) from the trees alone
// (only the T term when a = b-1).
ComplexityTable tree_derived_complexity(const Alphabet& alphabet,
                                        std::size_t N,
                                        const ComplexityOptions& options = {});

}  // namespace smooth
