#include "singular/singular_function.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace singular {
namespace {

template <ExactField F>
GEnclosure stream_enclosure(const QuotientStream& quotients, const F& lambda, const F& epsilon) {
  detail::check_lambda(lambda);
  const F complement = F{1} - lambda;
  auto next = [&]() -> Digit {
    auto a = quotients();
    if (!a) throw StreamExhausted("quotient stream ended before the tolerance was met; use g_series for rationals");
    if (*a == 0) throw std::invalid_argument("partial quotients must be positive");
    return *a;
  };

  F previous{0};
  F term = power(lambda, next() - 1);
  F sum = term;
  std::size_t k = 1;
  while (epsilon < term) {
    bool even_index = k % 2 == 1;
    term *= power(even_index ? complement : lambda, next());
    previous = sum;
    if (even_index) {
      sum -= term;
    } else {
      sum += term;
    }
    ++k;
  }
  GEnclosure out;
  out.terms = k;
  if (previous < sum) {
    out.lower = previous;
    out.upper = sum;
  } else {
    out.lower = sum;
    out.upper = previous;
  }
  return out;
}

}  // namespace

std::string to_string(const GValue& value) {
  return std::visit([](const auto& v) { return v.str(); }, value);
}

std::string to_decimal(const GValue& value, unsigned digits) {
  return std::visit([&](const auto& v) { return singular::to_decimal(v, digits); }, value);
}

QuadSurd as_quad(const GValue& value) {
  return std::visit([](const auto& v) { return QuadSurd(v); }, value);
}

Lambda::Lambda(Rational value) : value_(std::move(value)) {
  detail::check_lambda(std::get<Rational>(value_));
}

Lambda::Lambda(QuadSurd value) {
  detail::check_lambda(value);
  if (value.is_rational()) {
    value_ = value.rational_part();
  } else {
    value_ = std::move(value);
  }
}

Lambda Lambda::parse(std::string_view text) {
  return Lambda(QuadSurd::parse(text));
}

GValue g_inductive(const Rational& x, const Lambda& lambda) {
  return std::visit([&](const auto& l) -> GValue { return g_inductive(x, l); }, lambda.value());
}

Rational question_mark(const RegularCF& x) {
  if (x.is_one()) return Rational{1};
  Rational sum{0};
  std::uint64_t partial = 0;
  int sign = 1;
  for (Digit a : x.quotients()) {
    partial += a;
    Rational term(BigInt(1), BigInt(1) << static_cast<unsigned>(partial - 1));
    if (sign > 0) {
      sum += term;
    } else {
      sum -= term;
    }
    sign = -sign;
  }
  return sum;
}

GValue g_series(const RegularCF& x, const Lambda& lambda) {
  return std::visit([&](const auto& l) -> GValue { return g_series(x, l); }, lambda.value());
}

GValue g_series(const Rational& x, const Lambda& lambda) {
  return std::visit([&](const auto& l) -> GValue { return g_series(x, l); }, lambda.value());
}

QuadSurd g_tau2(const RegularCF& x) {
  if (x.is_one()) return QuadSurd{1};
  const QuadSurd tau = QuadSurd::tau();
  QuadSurd sum{0};
  std::uint64_t exponent = 0;
  std::size_t index = 1;
  for (Digit a : x.quotients()) {
    exponent += (index % 2 == 1 ? 2 : 1) * a;
    QuadSurd term = quad_pow(tau, exponent - 2);
    if (index % 2 == 1) {
      sum += term;
    } else {
      sum -= term;
    }
    ++index;
  }
  return sum;
}

QuadSurd g_tau2(const Rational& x) {
  if (x.is_zero()) return QuadSurd{0};
  return g_tau2(expand_rcf(x));
}

GValue GEnclosure::width() const {
  return std::visit(
      [](const auto& lo, const auto& hi) -> GValue {
        using Lo = std::decay_t<decltype(lo)>;
        using Hi = std::decay_t<decltype(hi)>;
        if constexpr (std::is_same_v<Lo, Hi>) {
          return hi - lo;
        } else {
          return QuadSurd(hi) - QuadSurd(lo);
        }
      },
      lower, upper);
}

std::string GEnclosure::str(unsigned digits) const {
  return "[" + to_decimal(lower, digits) + ", " + to_decimal(upper, digits) + "]";
}

GEnclosure g_stream(const QuotientStream& quotients, const Lambda& lambda, const Rational& epsilon) {
  if (epsilon.sign() <= 0) throw std::domain_error("epsilon must be positive");
  return std::visit(
      [&](const auto& l) {
        using F = std::decay_t<decltype(l)>;
        return stream_enclosure<F>(quotients, l, F(epsilon));
      },
      lambda.value());
}

}  // namespace singular
