#pragma once

// Exact rational numbers over arbitrary-precision integers.
//
// A Rational is always stored in lowest terms with a positive denominator,
// so equality is a comparison of the stored parts. Zero is 0/1.

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace singular {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value) : num_(value) {}  // NOLINT(google-explicit-constructor)

  explicit Rational(BigInt value) : num_(std::move(value)) {}

  /// Reduces to lowest terms; throws std::domain_error on a zero denominator.
  Rational(BigInt numerator, BigInt denominator);

  /// Parses "p/q" or "p" (optional leading '-'). Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  /// Parses a decimal literal such as "0.02", "-1.5" or "1e-15" exactly.
  static Rational parse_decimal(std::string_view text);

  const BigInt& numerator() const noexcept { return num_; }
  const BigInt& denominator() const noexcept { return den_; }

  int sign() const noexcept { return num_.sign(); }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_integer() const noexcept { return den_ == 1; }

  Rational abs() const;
  Rational reciprocal() const;

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) noexcept {
    return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

 private:
  struct Reduced {};
  Rational(BigInt numerator, BigInt denominator, Reduced) noexcept
      : num_(std::move(numerator)), den_(std::move(denominator)) {}

  void normalize();

  BigInt num_{0};
  BigInt den_{1};
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

/// The mediant (p + r)/(q + s) of p/q and r/s, both taken in lowest terms.
Rational mediant(const Rational& x, const Rational& y);

/// Integer power by repeated squaring; works for any exact field type.
template <typename F>
F power(F base, std::uint64_t exponent) {
  F result{1};
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

}  // namespace singular
