#pragma once

// Exact arithmetic in Q(sqrt 5).
//
// A QuadSurd is a + b*sqrt(5) with rational a, b. Because sqrt(5) is
// irrational the coefficient pair is unique, and ordering is decided exactly
// by sign analysis of a^2 - 5 b^2.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "singular/rational.hpp"

namespace singular {

class QuadSurd {
 public:
  QuadSurd() = default;

  template <std::integral T>
  QuadSurd(T value) : a_(value) {}  // NOLINT(google-explicit-constructor)

  QuadSurd(Rational rational_part)  // NOLINT(google-explicit-constructor)
      : a_(std::move(rational_part)) {}

  QuadSurd(Rational rational_part, Rational surd_part)
      : a_(std::move(rational_part)), b_(std::move(surd_part)) {}

  static QuadSurd sqrt5() { return {Rational{0}, Rational{1}}; }
  /// (sqrt 5 - 1)/2, root of t^2 + t - 1.
  static QuadSurd tau();
  /// tau^2 = (3 - sqrt 5)/2 = 1 - tau.
  static QuadSurd tau_squared();
  /// (1 + sqrt 5)/2.
  static QuadSurd golden_ratio();

  /// Accepts "a+b√5" / "a-b√5" / "b√5" / "a" with a, b in Rational text
  /// form, "sqrt5" as an ASCII spelling of "√5", and the keywords "tau"
  /// and "tau2".
  static QuadSurd parse(std::string_view text);

  const Rational& rational_part() const noexcept { return a_; }
  const Rational& surd_part() const noexcept { return b_; }

  bool is_rational() const noexcept { return b_.is_zero(); }
  bool is_zero() const noexcept { return a_.is_zero() && b_.is_zero(); }
  int sign() const;

  QuadSurd abs() const { return sign() < 0 ? -*this : *this; }
  /// a - b*sqrt(5).
  QuadSurd conjugate() const { return {a_, -b_}; }
  /// (a + b sqrt5)(a - b sqrt5) = a^2 - 5 b^2.
  Rational norm() const { return a_ * a_ - Rational{5} * b_ * b_; }

  std::string str() const;

  QuadSurd operator-() const { return {-a_, -b_}; }
  QuadSurd& operator+=(const QuadSurd& rhs);
  QuadSurd& operator-=(const QuadSurd& rhs);
  QuadSurd& operator*=(const QuadSurd& rhs);
  QuadSurd& operator/=(const QuadSurd& rhs);

  friend QuadSurd operator+(QuadSurd lhs, const QuadSurd& rhs) { return lhs += rhs; }
  friend QuadSurd operator-(QuadSurd lhs, const QuadSurd& rhs) { return lhs -= rhs; }
  friend QuadSurd operator*(QuadSurd lhs, const QuadSurd& rhs) { return lhs *= rhs; }
  friend QuadSurd operator/(QuadSurd lhs, const QuadSurd& rhs) { return lhs /= rhs; }

  friend bool operator==(const QuadSurd&, const QuadSurd&) = default;
  friend std::strong_ordering operator<=>(const QuadSurd& lhs, const QuadSurd& rhs) {
    return (lhs - rhs).sign() <=> 0;
  }

 private:
  Rational a_;
  Rational b_;
};

std::ostream& operator<<(std::ostream& os, const QuadSurd& value);

QuadSurd quad_pow(QuadSurd base, std::uint64_t exponent);

/// Decimal expansion rounded to nearest (ties upward) with `digits` digits
/// after the point. The irrational part is resolved with an exact integer
/// square root, so the result is within 10^-digits / 2 of the true value.
std::string to_decimal(const QuadSurd& x, unsigned digits);
std::string to_decimal(const Rational& x, unsigned digits);

}  // namespace singular
