#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace toughlab {

__extension__ using wide_int = __int128;

/// Reduced fraction with positive denominator. Arithmetic is overflow
/// checked and throws ErrorCode::Overflow.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const wide_int lhs = static_cast<wide_int>(a.num_) * b.den_;
    const wide_int rhs = static_cast<wide_int>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Largest fraction p/q <= x with q <= max_den (floor approximation).
Rational rational_floor(double x, std::int64_t max_den);

}  // namespace toughlab
