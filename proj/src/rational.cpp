#include "singular/rational.hpp"

#include <cctype>
#include <charconv>
#include <ostream>
#include <stdexcept>

#include <boost/multiprecision/integer.hpp>

namespace singular {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// cpp_int reads a leading 0 as an octal prefix, so strip it first.
BigInt from_decimal_digits(std::string_view s) {
  auto nz = s.find_first_not_of('0');
  if (nz == std::string_view::npos) return BigInt(0);
  return BigInt(std::string(s.substr(nz)));
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw std::invalid_argument("malformed rational '" + std::string(whole) +
                                "' (expected p/q or p)");
  }
  BigInt value = from_decimal_digits(s);
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational::Rational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  normalize();
}

void Rational::normalize() {
  if (den_.is_zero()) throw std::domain_error("rational with zero denominator");
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  if (den_ == 1) return;
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  auto den_text = text.substr(slash + 1);
  if (!all_digits(den_text)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) +
                                "' (expected p/q with q a positive integer)");
  }
  BigInt den = from_decimal_digits(den_text);
  if (den.is_zero()) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "' (zero denominator)");
  }
  return Rational(parse_integer(text.substr(0, slash), text), std::move(den));
}

Rational Rational::parse_decimal(std::string_view text) {
  std::string_view body = text;
  long exponent = 0;
  if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = body.substr(e + 1);
    if (exp_text.starts_with('+')) exp_text.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
    if (exp_text.empty() || ec != std::errc{} || ptr != exp_text.data() + exp_text.size() || exponent > 100000 ||
        exponent < -100000) {
      throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
    }
    body = body.substr(0, e);
  }
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto dot = body.find('.');
  std::string_view int_part = body.substr(0, dot);
  std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : body.substr(dot + 1);
  bool ok = (int_part.empty() || all_digits(int_part)) && (frac_part.empty() || all_digits(frac_part)) &&
            !(int_part.empty() && frac_part.empty());
  if (!ok) throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
  std::string digits = std::string(int_part) + std::string(frac_part);
  BigInt num = from_decimal_digits(digits);
  long scale = static_cast<long>(frac_part.size()) - exponent;
  BigInt den = 1;
  if (scale >= 0) {
    den = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(scale));
  } else {
    num *= boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(-scale));
  }
  if (negative) num = -num;
  return Rational(std::move(num), std::move(den));
}

Rational Rational::abs() const {
  return num_.sign() < 0 ? -*this : *this;
}

Rational Rational::reciprocal() const {
  if (num_.is_zero()) throw std::domain_error("reciprocal of zero");
  if (num_.sign() < 0) return Rational(BigInt(-den_), BigInt(-num_), Reduced{});
  return Rational(den_, num_, Reduced{});
}

std::string Rational::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

Rational Rational::operator-() const {
  return Rational(BigInt(-num_), den_, Reduced{});
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ -= rhs.num_;
  } else {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_.is_zero()) throw std::domain_error("division by zero");
  // Copy first: rhs may alias *this.
  BigInt rn = rhs.num_;
  num_ *= rhs.den_;
  den_ *= rn;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  if (lhs.den_ == rhs.den_) return lhs.num_.compare(rhs.num_) <=> 0;
  int ls = lhs.num_.sign();
  int rs = rhs.num_.sign();
  if (ls != rs) return ls <=> rs;
  BigInt a = lhs.num_ * rhs.den_;
  BigInt b = rhs.num_ * lhs.den_;
  return a.compare(b) <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.str();
}

Rational mediant(const Rational& x, const Rational& y) {
  return Rational(x.numerator() + y.numerator(), x.denominator() + y.denominator());
}

}  // namespace singular
