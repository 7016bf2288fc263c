#include "smooth/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "smooth/bispecial.hpp"
#include "smooth/errors.hpp"

namespace smooth {

const char* to_string(MatrixLabel label) {
  switch (label) {
    case MatrixLabel::M: return "M";
    case MatrixLabel::P: return "P";
    case MatrixLabel::N_vector: return "N";
    case MatrixLabel::R: return "R";
    case MatrixLabel::MPM: return "MPM";
  }
  return "?";
}

CountMatrix::CountMatrix(MatrixLabel label, std::size_t rows, std::size_t cols)
    : label_(label), rows_(rows), cols_(cols), entries_(rows * cols) {}

CountMatrix::CountMatrix(MatrixLabel label,
                         std::vector<std::vector<Rational>> rows)
    : label_(label),
      rows_(rows.size()),
      cols_(rows.empty() ? 0 : rows[0].size()) {
  for (auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix rows");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

CountMatrix CountMatrix::multiply(const CountMatrix& rhs,
                                  MatrixLabel label) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shape mismatch");
  CountMatrix out(label, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(i, k) == Rational{}) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        out.at(i, j) += at(i, k) * rhs.at(k, j);
      }
    }
  }
  return out;
}

std::vector<Rational> CountMatrix::apply(const std::vector<Rational>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector shape mismatch");
  std::vector<Rational> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
  }
  return out;
}

DenseMatrix CountMatrix::to_dense() const {
  DenseMatrix d(rows_, std::vector<double>(cols_));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) d[i][j] = at(i, j).to_double();
  }
  return d;
}

std::vector<Rational> CountMatrix::column(std::size_t j) const {
  std::vector<Rational> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = at(i, j);
  return out;
}

namespace {

void require_odd(const Alphabet& alphabet, const char* what) {
  if (!alphabet.is_odd()) {
    throw std::invalid_argument(std::string(what) + " needs an odd alphabet, got " +
                                alphabet.str());
  }
}

}  // namespace

OddMatrices build_matrices(const Alphabet& alphabet) {
  require_odd(alphabet, "build_matrices");
  const auto a = static_cast<std::int64_t>(alphabet.a());
  const auto b = static_cast<std::int64_t>(alphabet.b());
  const Rational am{a - 1, 2}, ap{a + 1, 2}, bm{b - 1, 2}, bp{b + 1, 2};
  const Rational z{0}, one{1};

  CountMatrix m(MatrixLabel::M, {{am, z, bm, z},
                                 {ap, z, bp, z},
                                 {z, ap, z, bp},
                                 {z, am, z, bm}});
  CountMatrix n(MatrixLabel::N_vector, {{am}, {ap}, {ap}, {am}});
  CountMatrix p(MatrixLabel::P, {{z, z, one, z},
                                 {z, z, z, one},
                                 {one, z, z, z},
                                 {z, one, z, z}});
  std::optional<CountMatrix> r;
  if (a == 1) {
    r = CountMatrix(MatrixLabel::R, {{z, z, bm}, {one, z, bp}, {z, one, z}});
  }
  return {std::move(m), std::move(n), std::move(p), std::move(r)};
}

std::vector<Rational> parity_vector(const Word& u) {
  ParityCountVector v = parity_counts(u);
  return {Rational(static_cast<std::int64_t>(v.count_a_even)),
          Rational(static_cast<std::int64_t>(v.count_a_odd)),
          Rational(static_cast<std::int64_t>(v.count_b_even)),
          Rational(static_cast<std::int64_t>(v.count_b_odd))};
}

std::vector<Rational> iterated_count_vector(const Alphabet& alphabet,
                                            std::size_t i) {
  OddMatrices mats = build_matrices(alphabet);
  const std::vector<Rational> n = mats.N.column(0);
  std::vector<Rational> term = n;
  std::vector<Rational> sum(4);
  for (std::size_t j = 0; j < i; ++j) {
    for (std::size_t k = 0; k < 4; ++k) sum[k] += term[k];
    term = mats.M.apply(term);
  }
  return sum;
}

std::vector<Rational> leading_count_term(const Alphabet& alphabet,
                                         std::size_t i) {
  if (i == 0) throw std::invalid_argument("leading_count_term needs i >= 1");
  OddMatrices mats = build_matrices(alphabet);
  std::vector<Rational> term = mats.N.column(0);
  for (std::size_t j = 1; j < i; ++j) term = mats.M.apply(term);
  return term;
}

Rational l1_norm(const std::vector<Rational>& v) {
  Rational s;
  for (const auto& x : v) s += x < Rational{} ? Rational{} - x : x;
  return s;
}

namespace {

void require_square(const DenseMatrix& a) {
  for (const auto& row : a) {
    if (row.size() != a.size()) {
      throw std::invalid_argument("spectral radius of a non-square matrix");
    }
  }
}

DenseMatrix multiply(const DenseMatrix& x, const DenseMatrix& y) {
  const std::size_t n = x.size();
  DenseMatrix out(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (x[i][k] == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] += x[i][k] * y[k][j];
    }
  }
  return out;
}

std::vector<double> mat_vec(const DenseMatrix& a, const std::vector<double>& x) {
  std::vector<double> out(a.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) out[i] += a[i][j] * x[j];
  }
  return out;
}

constexpr int kMaxIterations = 200000;

// Collatz-Wielandt iteration; the caller guarantees primitivity.
double perron_root(const DenseMatrix& a, double tol) {
  const std::size_t n = a.size();
  std::vector<double> x(n, 1.0 / static_cast<double>(n));
  for (int it = 0; it < kMaxIterations; ++it) {
    std::vector<double> y = mat_vec(a, x);
    double lo = INFINITY, hi = 0.0, sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      sum += y[i];
      if (x[i] > 0.0) {
        lo = std::min(lo, y[i] / x[i]);
        hi = std::max(hi, y[i] / x[i]);
      } else {
        lo = 0.0;
      }
    }
    if (sum == 0.0) return 0.0;
    if (hi - lo <= tol * std::max(1.0, hi)) return 0.5 * (lo + hi);
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / sum;
  }
  throw NoConvergence("power iteration did not converge");
}

}  // namespace

bool is_primitive(const DenseMatrix& a, int max_power) {
  require_square(a);
  if (a.empty()) return false;
  for (const auto& row : a) {
    for (double v : row) {
      if (v < 0.0) return false;
    }
  }
  DenseMatrix pw = a;
  for (int k = 1; k <= max_power; ++k) {
    bool positive = true;
    for (const auto& row : pw) {
      for (double v : row) positive = positive && v > 0.0;
    }
    if (positive) return true;
    pw = multiply(pw, a);
  }
  return false;
}

double spectral_radius(const DenseMatrix& a, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (!is_primitive(a)) {
    throw NotPrimitive("matrix has no strictly positive power up to 8");
  }
  return perron_root(a, tol);
}

double spectral_radius(const CountMatrix& m, double tol) {
  return spectral_radius(m.to_dense(), tol);
}

double nonnegative_spectral_radius(const DenseMatrix& a, double tol) {
  require_square(a);
  const std::size_t n = a.size();
  // Tarjan's strongly connected components on the support graph.
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  int counter = 0, ncomp = 0;
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t w = 0; w < n; ++w) {
      if (a[v][w] <= 0.0) continue;
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp[w] = ncomp;
      } while (w != v);
      ++ncomp;
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (index[v] < 0) visit(v);
  }

  double radius = 0.0;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<std::size_t> members;
    for (std::size_t v = 0; v < n; ++v) {
      if (comp[v] == c) members.push_back(v);
    }
    DenseMatrix block(members.size(), std::vector<double>(members.size()));
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = 0; j < members.size(); ++j) {
        block[i][j] = a[members[i]][members[j]];
      }
    }
    if (members.size() == 1) {
      radius = std::max(radius, block[0][0]);
      continue;
    }
    // Irreducible block: adding I makes it primitive without moving the
    // Perron root other than by the shift.
    for (std::size_t i = 0; i < members.size(); ++i) block[i][i] += 1.0;
    radius = std::max(radius, perron_root(block, tol) - 1.0);
  }
  return radius;
}

std::vector<double> left_perron_vector(const DenseMatrix& a, double tol) {
  require_square(a);
  if (!is_primitive(a)) {
    throw NotPrimitive("left Perron vector of a non-primitive matrix");
  }
  const std::size_t n = a.size();
  DenseMatrix t(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = a[j][i];
  }
  std::vector<double> w(n, 1.0);
  for (int it = 0; it < kMaxIterations; ++it) {
    std::vector<double> y = mat_vec(t, w);
    const double mx = *std::max_element(y.begin(), y.end());
    double diff = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      y[i] /= mx;
      diff = std::max(diff, std::abs(y[i] - w[i]));
    }
    w.swap(y);
    if (diff <= tol) return w;
  }
  throw NoConvergence("left Perron vector did not converge");
}

double dominant_cubic_root(double s, double q) {
  auto p = [&](double x) { return x * x * x - s * x * x + q; };
  auto dp = [&](double x) { return 3 * x * x - 2 * s * x; };
  const double floor_x = 2.0 * s / 3.0;  // local minimum of p
  double lo = s - 1.0;
  double hi = s;
  while (p(lo) >= 0.0 && lo > floor_x) lo = std::max(floor_x, lo - 1.0);
  if (p(lo) >= 0.0 || p(hi) <= 0.0) {
    throw NoConvergence("no sign change for the dominant cubic root");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (p(mid) < 0.0 ? lo : hi) = mid;
  }
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 3; ++it) {
    const double d = dp(x);
    if (d == 0.0) break;
    x -= p(x) / d;
  }
  return x;
}

double lambda_of(const Alphabet& alphabet) {
  require_odd(alphabet, "lambda_of");
  const double a = alphabet.a();
  const double b = alphabet.b();
  if (alphabet.a() == 1) return (1.0 + std::sqrt(2.0 * b - 1.0)) / 2.0;
  return dominant_cubic_root((a + b) / 2.0, (b - a) * (b - a) / 4.0);
}

double rho(const Alphabet& alphabet) {
  const double s = alphabet.a() + alphabet.b();
  return std::log(s) / std::log(s / 2.0);
}

double alpha(const Alphabet& alphabet) {
  const double a = alphabet.a();
  const double b = alphabet.b();
  return std::log(a + b) / std::log((a * a + b * b) / (a + b));
}

double beta(const Alphabet& alphabet) {
  const double a = alphabet.a();
  const double b = alphabet.b();
  return std::log(2.0 * b * b) / std::log(2.0 * a * b / (a + b));
}

double zeta_of_lambda(double lambda) {
  return std::log(2.0 * lambda) / std::log(lambda);
}

double rho_prime(const Alphabet& alphabet) {
  const double a = alphabet.a();
  const double b = alphabet.b();
  return std::log(2.0 * b - 1.0) / std::log((a + b) / 2.0);
}

double c_constant(const Alphabet& alphabet) {
  const double a = alphabet.a();
  const double b = alphabet.b();
  return 4.0 * a / (a + b - 2.0);
}

double freq_lower_exponent(double phi, double n_min) {
  return std::log(3.0) / std::log(1.5 + phi + 2.0 / n_min);
}

double freq_upper_exponent(double phi) {
  return std::log(3.0) / std::log(1.5 - phi);
}

double flawed_lower_exponent(const Alphabet& alphabet, double phi) {
  const double a = alphabet.a();
  const double b = alphabet.b();
  return std::log(2.0 * b - 1.0) / std::log(1.0 + (a + b - 2.0) * (1.0 - phi));
}

double flawed_upper_exponent(const Alphabet& alphabet, double phi) {
  const double a = alphabet.a();
  const double b = alphabet.b();
  return std::log(2.0 * b - 1.0) / std::log(1.0 + (a + b - 2.0) * phi);
}

ExponentReport exponent_report(const Alphabet& alphabet) {
  ExponentReport r{
      alphabet,
      {rho(alphabet), "log(a+b)/log((a+b)/2)"},
      {alpha(alphabet), "log(a+b)/log((a^2+b^2)/(a+b))"},
      {beta(alphabet), "log(2b^2)/log(2ab/(a+b))"},
      std::nullopt,
      std::nullopt,
      {rho_prime(alphabet), "log(2b-1)/log((a+b)/2)"},
      {c_constant(alphabet), "4a/(a+b-2)"}};
  if (alphabet.is_odd()) {
    const double l = lambda_of(alphabet);
    r.lambda = Exponent{
        l, alphabet.a() == 1 ? "(1+sqrt(2b-1))/2"
                             : "dominant root of X^3-((a+b)/2)X^2+(b-a)^2/4"};
    r.zeta = Exponent{zeta_of_lambda(l), "log(2*lambda)/log(lambda)"};
  }
  return r;
}

namespace {

struct LayoutEntry {
  Letter a, b;
  int rho_decimals, zeta_decimals, beta_decimals;
};

constexpr LayoutEntry kLayout[] = {
    {1, 3, 0, 2, 3}, {1, 5, 2, 0, 3}, {3, 5, 1, 2, 2},
    {1, 7, 1, 3, 3}, {3, 7, 3, 2, 3}, {5, 7, 3, 3, 1},
    {1, 9, 3, 2, 3}, {3, 9, 3, 3, 3}, {5, 9, 3, 3, 3},
};

}  // namespace

std::vector<ComparisonColumn> comparison_table() {
  std::vector<ComparisonColumn> out;
  for (const auto& e : kLayout) {
    Alphabet alph(e.a, e.b);
    out.push_back({alph,
                   {rho(alph), e.rho_decimals},
                   {zeta_of_lambda(lambda_of(alph)), e.zeta_decimals},
                   {beta(alph), e.beta_decimals}});
  }
  return out;
}

std::string format_fixed(double value, int decimals) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(decimals) << value;
  return os.str();
}

std::string render_comparison_table(const std::vector<ComparisonColumn>& table,
                                    bool full_precision) {
  auto cell = [&](const TableCell& c) {
    return format_fixed(c.value, full_precision ? 10 : c.decimals);
  };
  std::vector<std::vector<std::string>> grid{{"alphabet"}, {"rho"}, {"zeta"},
                                             {"beta"}};
  for (const auto& col : table) {
    grid[0].push_back(col.alphabet.str());
    grid[1].push_back(cell(col.rho));
    grid[2].push_back(cell(col.zeta));
    grid[3].push_back(cell(col.beta));
  }
  std::vector<std::size_t> width(grid[0].size(), 0);
  for (const auto& row : grid) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      width[j] = std::max(width[j], row[j].size());
    }
  }
  std::ostringstream os;
  for (const auto& row : grid) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) os << "  ";
      os << std::setw(static_cast<int>(width[j]))
         << (j == 0 ? std::left : std::right) << row[j];
    }
    os << '\n';
  }
  return os.str();
}

LowerBoundConstants lower_bound_constants(const Alphabet& alphabet,
                                          std::size_t generations) {
  require_odd(alphabet, "lower_bound_constants");
  OddMatrices mats = build_matrices(alphabet);
  const double lambda = lambda_of(alphabet);

  std::vector<double> w;
  if (mats.R) {
    w = left_perron_vector(mats.R->to_dense());
    w.push_back(0.0);
  } else {
    w = left_perron_vector(mats.M.to_dense());
  }
  const std::vector<Rational> n = mats.N.column(0);
  double wn = 0.0;
  for (std::size_t k = 0; k < 4; ++k) wn += w[k] * n[k].to_double();
  // With w <= 1 entrywise and w M >= lambda w, the sum over j < i of
  // w.M^j N bounds l_i from below by wn (lambda^i - 1)/(lambda - 1).
  const double C = wn / (lambda - 1.0);
  const double D = std::max(0.0, C - 1.0);

  TreeOptions opts;
  opts.max_generation = std::max(opts.max_generation, generations);
  auto stats = generation_stats_upto(alphabet, Family::T, generations, opts);
  for (const auto& s : stats) {
    const double bound =
        C * std::pow(lambda, static_cast<double>(s.generation)) - D - 1.0;
    const double slack = 1e-9 * std::max(1.0, std::abs(bound));
    if (static_cast<double>(s.min_len) + slack < bound) {
      throw BoundViolation("l_" + std::to_string(s.generation) + " = " +
                           std::to_string(s.min_len) + " is below " +
                           std::to_string(bound) + " over " + alphabet.str());
    }
  }
  return {C, D, lambda, generations};
}

double L_growth_radius(const Alphabet& alphabet) {
  OddMatrices mats = build_matrices(alphabet);
  CountMatrix mp = mats.M.multiply(mats.P, MatrixLabel::MPM);
  CountMatrix mpm = mp.multiply(mats.M, MatrixLabel::MPM);
  return nonnegative_spectral_radius(mpm.to_dense());
}

}  // namespace smooth
