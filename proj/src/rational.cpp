#include "smooth/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace smooth {

namespace {

std::int64_t checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) {
    throw std::overflow_error("rational arithmetic overflow");
  }
  return static_cast<std::int64_t>(v);
}

Rational reduce(__int128 n, __int128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 a = n < 0 ? -n : n;
  __int128 b = d;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    n /= a;
    d /= a;
  }
  return Rational(checked(n), checked(d));
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
  if (d == 0) throw std::invalid_argument("rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const std::int64_t g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& x, const Rational& y) {
  return reduce(__int128{x.num_} * y.den_ + __int128{y.num_} * x.den_,
                __int128{x.den_} * y.den_);
}

Rational operator-(const Rational& x, const Rational& y) {
  return reduce(__int128{x.num_} * y.den_ - __int128{y.num_} * x.den_,
                __int128{x.den_} * y.den_);
}

Rational operator*(const Rational& x, const Rational& y) {
  return reduce(__int128{x.num_} * y.num_, __int128{x.den_} * y.den_);
}

std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
  return __int128{x.num_} * y.den_ <=> __int128{y.num_} * x.den_;
}

}  // namespace smooth
