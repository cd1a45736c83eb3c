#include "singular/continued_fraction.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace singular {
namespace {

std::vector<Digit> parse_digit_list(std::string_view list, std::string_view whole, std::string_view format) {
  std::vector<Digit> out;
  if (list.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = list.find(',', start);
    std::string_view item = list.substr(start, comma == std::string_view::npos ? list.size() - start : comma - start);
    Digit value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      throw std::invalid_argument("malformed continued fraction '" + std::string(whole) + "' (expected " +
                                  std::string(format) + ")");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string join_digits(std::span<const Digit> digits) {
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(digits[i]);
  }
  return out;
}

Digit to_digit(const BigInt& value) {
  if (value > std::numeric_limits<Digit>::max()) {
    throw std::overflow_error("partial quotient " + value.str() + " exceeds 64 bits");
  }
  return static_cast<Digit>(value);
}

}  // namespace

RegularCF::RegularCF(std::vector<Digit> quotients) : quotients_(std::move(quotients)) {
  for (Digit a : quotients_) {
    if (a == 0) throw std::invalid_argument("partial quotients must be positive");
  }
  if (!quotients_.empty() && quotients_.back() < 2) {
    throw std::invalid_argument("canonical continued fraction must end in a quotient >= 2");
  }
}

RegularCF RegularCF::parse(std::string_view text) {
  constexpr std::string_view kFormat = "[0;a1,a2,...]";
  if (!text.starts_with("[0;") || !text.ends_with("]") || text.starts_with("[[")) {
    throw std::invalid_argument("malformed continued fraction '" + std::string(text) + "' (expected " +
                                std::string(kFormat) + ")");
  }
  auto digits = parse_digit_list(text.substr(3, text.size() - 4), text, kFormat);
  if (digits.empty()) {
    throw std::invalid_argument("malformed continued fraction '" + std::string(text) +
                                "' (at least one quotient required)");
  }
  if (digits.size() == 1 && digits.front() == 1) return RegularCF{};
  return RegularCF(std::move(digits));
}

std::string RegularCF::str() const {
  if (quotients_.empty()) return "[0;1]";
  return "[0;" + join_digits(quotients_) + "]";
}

ReducedRCF::ReducedRCF(std::vector<Digit> digits) : digits_(std::move(digits)) {
  if (digits_.empty()) throw std::invalid_argument("reduced continued fraction needs at least one digit");
  for (Digit b : digits_) {
    if (b < 2) throw std::invalid_argument("reduced continued fraction digits must be >= 2");
  }
}

ReducedRCF ReducedRCF::parse(std::string_view text) {
  constexpr std::string_view kFormat = "[[1;b1,b2,...]]";
  if (!text.starts_with("[[1;") || !text.ends_with("]]")) {
    throw std::invalid_argument("malformed reduced continued fraction '" + std::string(text) + "' (expected " +
                                std::string(kFormat) + ")");
  }
  return ReducedRCF(parse_digit_list(text.substr(4, text.size() - 6), text, kFormat));
}

std::string ReducedRCF::str() const {
  return "[[1;" + join_digits(digits_) + "]]";
}

RegularCF expand_rcf(const Rational& x) {
  if (x.sign() <= 0 || x > Rational{1}) {
    throw std::domain_error("regular continued fraction needs 0 < x <= 1, got " + x.str());
  }
  std::vector<Digit> quotients;
  BigInt p = x.numerator();
  BigInt q = x.denominator();
  if (p == q) return RegularCF{};
  while (!p.is_zero()) {
    BigInt a;
    BigInt r;
    boost::multiprecision::divide_qr(q, p, a, r);
    quotients.push_back(to_digit(a));
    q = std::move(p);
    p = std::move(r);
  }
  return RegularCF(std::move(quotients));
}

Rational value_rcf(const RegularCF& cf) {
  auto quotients = cf.quotients();
  if (quotients.empty()) return Rational{1};
  // Tail value y = num/den, folded from the last quotient up.
  BigInt num = quotients.back();
  BigInt den = 1;
  for (std::size_t i = quotients.size() - 1; i-- > 0;) {
    BigInt next = quotients[i] * num + den;
    den = std::move(num);
    num = std::move(next);
  }
  return Rational(std::move(den), std::move(num));
}

std::uint64_t sum_partial_quotients(const RegularCF& cf) {
  if (cf.is_one()) return 1;
  auto q = cf.quotients();
  return std::accumulate(q.begin(), q.end(), std::uint64_t{0});
}

ReducedRCF expand_rrcf(const Rational& x) {
  if (x.sign() <= 0 || x >= Rational{1}) {
    throw std::domain_error("reduced continued fraction needs 0 < x < 1, got " + x.str());
  }
  return rcf_to_rrcf(expand_rcf(x));
}

Rational value_rrcf(const ReducedRCF& rcf) {
  auto digits = rcf.digits();
  BigInt num = digits.back();
  BigInt den = 1;
  for (std::size_t i = digits.size() - 1; i-- > 0;) {
    BigInt next = digits[i] * num - den;
    den = std::move(num);
    num = std::move(next);
    if (num.sign() <= 0) throw std::logic_error("vanishing minor in reduced continued fraction");
  }
  // 1 - den/num
  return Rational(num - den, std::move(num));
}

ReducedRCF rcf_to_rrcf(const RegularCF& cf) {
  auto a = cf.quotients();
  if (a.empty()) throw std::domain_error("x = 1 has no reduced continued fraction");
  std::vector<Digit> b;
  for (std::size_t i = 0; i < a.size(); ++i) {
    bool odd_index = i % 2 == 0;  // a_{i+1}
    if (odd_index) {
      b.insert(b.end(), a[i] - 1, Digit{2});
    } else if (i + 1 == a.size()) {
      b.push_back(a[i] + 1);
    } else {
      b.push_back(a[i] + 2);
    }
  }
  return ReducedRCF(std::move(b));
}

std::uint64_t digit_sum_L(const ReducedRCF& rcf) {
  auto d = rcf.digits();
  return std::accumulate(d.begin(), d.end(), std::uint64_t{0});
}

}  // namespace singular
