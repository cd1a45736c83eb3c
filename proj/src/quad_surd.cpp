#include "singular/quad_surd.hpp"

#include <ostream>
#include <stdexcept>

#include <boost/multiprecision/integer.hpp>

namespace singular {
namespace {

constexpr std::string_view kSurd = "√5";
constexpr std::string_view kAsciiSurd = "sqrt5";

// floor(s * sqrt 5) for an integer s.
BigInt floor_times_sqrt5(const BigInt& s) {
  if (s.is_zero()) return 0;
  BigInt root = boost::multiprecision::sqrt(BigInt(5 * s * s));
  // 5 s^2 is never a perfect square for s != 0, so the root is inexact.
  return s.sign() > 0 ? root : BigInt(-root - 1);
}

// floor(n / d) for d > 0.
BigInt floor_div(const BigInt& n, const BigInt& d) {
  BigInt q = n / d;
  if (n.sign() < 0 && q * d != n) q -= 1;
  return q;
}

Rational parse_coefficient(std::string_view text, std::string_view whole) {
  if (text.empty() || text == "+") return Rational{1};
  if (text == "-") return Rational{-1};
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed quadratic surd '" + std::string(whole) +
                                "' (expected a+b√5 with a, b as p/q, or tau, tau2)");
  }
}

}  // namespace

QuadSurd QuadSurd::tau() { return {Rational(-1, 2), Rational(1, 2)}; }

QuadSurd QuadSurd::tau_squared() { return {Rational(3, 2), Rational(-1, 2)}; }

QuadSurd QuadSurd::golden_ratio() { return {Rational(1, 2), Rational(1, 2)}; }

QuadSurd QuadSurd::parse(std::string_view text) {
  if (text == "tau") return tau();
  if (text == "tau2") return tau_squared();
  std::string body(text);
  if (auto pos = body.find(kAsciiSurd); pos != std::string::npos) {
    body.replace(pos, kAsciiSurd.size(), kSurd);
  }
  std::string_view view(body);
  if (!view.ends_with(kSurd)) return QuadSurd(parse_coefficient(view, text));
  view.remove_suffix(kSurd.size());
  if (view.ends_with('*')) view.remove_suffix(1);

  std::size_t split = std::string_view::npos;
  for (std::size_t i = 1; i < view.size(); ++i) {
    if (view[i] == '+' || view[i] == '-') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) return {Rational{0}, parse_coefficient(view, text)};

  Rational a = parse_coefficient(view.substr(0, split), text);
  std::string_view rest = view.substr(split + 1);
  Rational b = parse_coefficient(rest, text);
  if (view[split] == '-') b = -b;
  return {std::move(a), std::move(b)};
}

int QuadSurd::sign() const {
  int sa = a_.sign();
  int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with 5 b^2; equality is impossible.
  auto cmp = (a_ * a_) <=> (Rational{5} * b_ * b_);
  return cmp > 0 ? sa : sb;
}

std::string QuadSurd::str() const {
  if (b_.is_zero()) return a_.str();
  Rational mag = b_.abs();
  std::string surd = (mag == Rational{1} ? std::string() : mag.str()) + std::string(kSurd);
  if (a_.is_zero()) return b_.sign() < 0 ? "-" + surd : surd;
  return a_.str() + (b_.sign() < 0 ? "-" : "+") + surd;
}

QuadSurd& QuadSurd::operator+=(const QuadSurd& rhs) {
  a_ += rhs.a_;
  b_ += rhs.b_;
  return *this;
}

QuadSurd& QuadSurd::operator-=(const QuadSurd& rhs) {
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  return *this;
}

QuadSurd& QuadSurd::operator*=(const QuadSurd& rhs) {
  if (rhs.b_.is_zero() && b_.is_zero()) {
    a_ *= rhs.a_;
    return *this;
  }
  Rational a = a_ * rhs.a_ + Rational{5} * b_ * rhs.b_;
  Rational b = a_ * rhs.b_ + b_ * rhs.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadSurd& QuadSurd::operator/=(const QuadSurd& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero in Q(sqrt 5)");
  if (rhs.b_.is_zero()) {
    Rational d = rhs.a_;
    a_ /= d;
    b_ /= d;
    return *this;
  }
  Rational n = rhs.norm();
  *this *= rhs.conjugate();
  a_ /= n;
  b_ /= n;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const QuadSurd& value) {
  return os << value.str();
}

QuadSurd quad_pow(QuadSurd base, std::uint64_t exponent) {
  return power(std::move(base), exponent);
}

std::string to_decimal(const QuadSurd& x, unsigned digits) {
  if (digits == 0) throw std::invalid_argument("to_decimal needs at least one digit");
  const Rational& a = x.rational_part();
  const Rational& b = x.surd_part();
  BigInt scale = boost::multiprecision::pow(BigInt(10), digits);
  // x * 10^d = (A + B sqrt5) / D with integers A, B and D > 0.
  BigInt d = a.denominator() * b.denominator();
  BigInt big_a = a.numerator() * b.denominator() * scale;
  BigInt big_b = b.numerator() * a.denominator() * scale;
  // round(v) = floor(v + 1/2) = floor((2A + D + 2B sqrt5) / 2D).
  BigInt top = 2 * big_a + d + floor_times_sqrt5(BigInt(2 * big_b));
  BigInt rounded = floor_div(top, BigInt(2 * d));

  bool negative = rounded.sign() < 0;
  std::string magnitude = (negative ? BigInt(-rounded) : rounded).str();
  if (magnitude.size() <= digits) magnitude.insert(0, digits + 1 - magnitude.size(), '0');
  magnitude.insert(magnitude.size() - digits, 1, '.');
  return negative ? "-" + magnitude : magnitude;
}

std::string to_decimal(const Rational& x, unsigned digits) {
  return to_decimal(QuadSurd(x), digits);
}

}  // namespace singular
