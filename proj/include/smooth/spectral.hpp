#pragma once

// Parity-count matrices of odd alphabets, spectral radii and the growth
// exponents derived from them.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "smooth/alphabet.hpp"
#include "smooth/rational.hpp"

namespace smooth {

enum class MatrixLabel { M, P, N_vector, R, MPM };

const char* to_string(MatrixLabel label);

using DenseMatrix = std::vector<std::vector<double>>;

class CountMatrix {
 public:
  CountMatrix(MatrixLabel label, std::size_t rows, std::size_t cols);
  CountMatrix(MatrixLabel label, std::vector<std::vector<Rational>> rows);

  MatrixLabel label() const noexcept { return label_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  CountMatrix multiply(const CountMatrix& rhs, MatrixLabel label) const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;
  DenseMatrix to_dense() const;
  std::vector<Rational> column(std::size_t j) const;

  friend bool operator==(const CountMatrix&, const CountMatrix&) = default;

 private:
  MatrixLabel label_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> entries_;
};

struct OddMatrices {
  CountMatrix M;
  CountMatrix N;  // 4x1
  CountMatrix P;
  std::optional<CountMatrix> R;  // a = 1 only: the leading 3x3 block of M
};

// Throws std::invalid_argument unless both letters are odd.
OddMatrices build_matrices(const Alphabet& alphabet);

// V(u) = (|u|_{a,even}, |u|_{a,odd}, |u|_{b,even}, |u|_{b,odd}), positions
// counted from 1.
std::vector<Rational> parity_vector(const Word& u);

// sum_{j<i} M^j N, which is V(P_{f,a}^i(ε)).
std::vector<Rational> iterated_count_vector(const Alphabet& alphabet,
                                            std::size_t i);
// M^(i-1) N for i >= 1.
std::vector<Rational> leading_count_term(const Alphabet& alphabet,
                                         std::size_t i);

Rational l1_norm(const std::vector<Rational>& v);

// Some power A^k, 1 <= k <= max_power, is strictly positive.
bool is_primitive(const DenseMatrix& a, int max_power = 8);

// Perron root of a primitive matrix by power iteration, stopped when the
// Collatz-Wielandt bounds min (Ax)_i/x_i and max (Ax)_i/x_i are within tol.
// Throws NotPrimitive or NoConvergence.
double spectral_radius(const DenseMatrix& a, double tol = 1e-12);
double spectral_radius(const CountMatrix& m, double tol = 1e-12);

// Spectral radius of any nonnegative square matrix: the largest Perron root
// over its strongly connected components, each shifted by the identity so
// that periodic blocks converge.
double nonnegative_spectral_radius(const DenseMatrix& a, double tol = 1e-12);

// Left Perron vector (w A = r w) of a primitive matrix, scaled to max entry 1.
std::vector<double> left_perron_vector(const DenseMatrix& a, double tol = 1e-13);

// Largest real root of X^3 - s X^2 + q, q > 0: sign-change bisection starting
// on (s-1, s), widened towards 2s/3 when needed, then Newton.
double dominant_cubic_root(double s, double q);

// (1 + sqrt(2b-1))/2 when a = 1, otherwise the dominant root of
// X^3 - ((a+b)/2) X^2 + (b-a)^2/4. Odd alphabets only.
double lambda_of(const Alphabet& alphabet);

double rho(const Alphabet& alphabet);
double alpha(const Alphabet& alphabet);
double beta(const Alphabet& alphabet);
double zeta_of_lambda(double lambda);
// Exponent suggested by the flawed finite-derivative argument.
double rho_prime(const Alphabet& alphabet);
double c_constant(const Alphabet& alphabet);

// Exponents of the frequency-based bounds over {1,2}, given that
// |u|_2/|u| > 1/2 - phi for every f-smooth u longer than n_min.
double freq_lower_exponent(double phi, double n_min);
double freq_upper_exponent(double phi);
// The generalization to arbitrary alphabets that does not hold, with
// |u|_2/|u| > phi.
double flawed_lower_exponent(const Alphabet& alphabet, double phi);
double flawed_upper_exponent(const Alphabet& alphabet, double phi);

struct Exponent {
  double value;
  std::string formula;
};

struct ExponentReport {
  Alphabet alphabet;
  Exponent rho;
  Exponent alpha;
  Exponent beta;
  std::optional<Exponent> zeta;    // odd alphabets
  std::optional<Exponent> lambda;  // odd alphabets
  Exponent rho_prime;
  Exponent c_constant;
};

ExponentReport exponent_report(const Alphabet& alphabet);

struct TableCell {
  double value;
  int decimals;  // display precision of the reference layout
};

struct ComparisonColumn {
  Alphabet alphabet;
  TableCell rho;
  TableCell zeta;
  TableCell beta;
};

// rho, zeta and beta for {1,3}, {1,5}, {3,5}, {1,7}, {3,7}, {5,7}, {1,9},
// {3,9}, {5,9}.
std::vector<ComparisonColumn> comparison_table();

// Plain-text layout: a header row of alphabets then one row per exponent.
// full_precision ignores the per-cell decimals and prints 10 decimals.
std::string render_comparison_table(const std::vector<ComparisonColumn>& table,
                                    bool full_precision = false);

std::string format_fixed(double value, int decimals);

struct LowerBoundConstants {
  double C;
  double D;
  double lambda;
  std::size_t verified_generations;
};

// C and D with l_i >= C lambda^i - D - 1, from the left Perron vector w of R
// (a = 1, padded with 0) or M: C = (w.N)/(lambda-1), D = max(0, C-1). The
// bound is checked against the minimal tree lengths for i <= generations;
// BoundViolation if it fails.
LowerBoundConstants lower_bound_constants(const Alphabet& alphabet,
                                          std::size_t generations);

// Spectral radius of M P M.
double L_growth_radius(const Alphabet& alphabet);

}  // namespace smooth
