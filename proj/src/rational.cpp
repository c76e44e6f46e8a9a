#include "toughlab/rational.hpp"

#include <cmath>
#include <numeric>

#include "toughlab/error.hpp"

namespace toughlab {

namespace {

std::int64_t narrow(wide_int v) {
  if (v > INT64_MAX || v < INT64_MIN) throw Error(ErrorCode::Overflow, "rational component exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

Rational make(wide_int num, wide_int den) {
  if (den == 0) throw Error(ErrorCode::InvalidParams, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  wide_int a = num < 0 ? -num : num;
  wide_int b = den;
  while (b != 0) {
    const wide_int t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return Rational(narrow(num), narrow(den));
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::InvalidParams, "zero denominator");
  if (den < 0) {
    if (num == INT64_MIN || den == INT64_MIN) throw Error(ErrorCode::Overflow, "cannot negate INT64_MIN");
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return make(static_cast<wide_int>(a.num_) * b.den_ + static_cast<wide_int>(b.num_) * a.den_,
              static_cast<wide_int>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return make(static_cast<wide_int>(a.num_) * b.den_ - static_cast<wide_int>(b.num_) * a.den_,
              static_cast<wide_int>(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return make(static_cast<wide_int>(a.num_) * b.num_, static_cast<wide_int>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw Error(ErrorCode::InvalidParams, "division by zero");
  return make(static_cast<wide_int>(a.num_) * b.den_, static_cast<wide_int>(a.den_) * b.num_);
}

Rational rational_floor(double x, std::int64_t max_den) {
  if (!std::isfinite(x) || max_den < 1) throw Error(ErrorCode::InvalidParams, "rational_floor needs finite x");
  Rational best(static_cast<std::int64_t>(std::floor(x)));
  for (std::int64_t q = 2; q <= max_den; ++q) {
    const Rational cand(static_cast<std::int64_t>(std::floor(x * static_cast<double>(q))), q);
    if (cand.to_double() <= x && cand > best) best = cand;
  }
  return best;
}

}  // namespace toughlab
