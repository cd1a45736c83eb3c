#pragma once

// The singular functions g_lambda, lambda in (0, 1).
//
// g(0) = 0, g(1) = 1, and for neighbours x < y of a Stern-Brocot level
//   g(x (+) y) = g(x) + (g(y) - g(x)) * lambda.
// g_{1/2} is Minkowski's question mark function.
//
// Every evaluator is exact. The generic ones accept any ordered field type
// (Rational or QuadSurd); the Lambda overloads dispatch on the number system.

#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "singular/continued_fraction.hpp"
#include "singular/quad_surd.hpp"
#include "singular/rational.hpp"

namespace singular {

template <typename F>
concept ExactField = requires(F a, F b) {
  F{1};
  { a + b } -> std::same_as<F>;
  { a - b } -> std::same_as<F>;
  { a * b } -> std::same_as<F>;
  { a / b } -> std::same_as<F>;
  { a < b } -> std::convertible_to<bool>;
  a *= b;
};

/// A value in either number system.
using GValue = std::variant<Rational, QuadSurd>;

std::string to_string(const GValue& value);
std::string to_decimal(const GValue& value, unsigned digits);
/// Lifts either alternative into Q(sqrt 5).
QuadSurd as_quad(const GValue& value);

/// Parameter lambda with 0 < lambda < 1 checked exactly.
class Lambda {
 public:
  Lambda(Rational value);  // NOLINT(google-explicit-constructor)
  Lambda(QuadSurd value);  // NOLINT(google-explicit-constructor)

  static Lambda tau_squared() { return Lambda(QuadSurd::tau_squared()); }
  /// "p/q", "tau", "tau2" or "a+b√5". Surds with zero irrational part are
  /// stored as Rational.
  static Lambda parse(std::string_view text);

  const GValue& value() const noexcept { return value_; }
  bool is_rational() const noexcept { return std::holds_alternative<Rational>(value_); }
  std::string str() const { return to_string(value_); }

 private:
  GValue value_;
};

namespace detail {
template <ExactField F>
void check_lambda(const F& lambda) {
  if (!(F{0} < lambda) || !(lambda < F{1})) throw std::domain_error("lambda must lie in (0, 1)");
}
}  // namespace detail

/// Walks the Stern-Brocot bisection path from (0/1, 1/1) down to x, applying
/// the defining recurrence at each mediant. O(S(x)) steps.
template <ExactField F>
F g_inductive(const Rational& x, const F& lambda) {
  detail::check_lambda(lambda);
  if (x.sign() < 0 || x > Rational{1}) throw std::domain_error("g_lambda is defined on [0, 1]");
  Rational lo{0};
  Rational hi{1};
  F g_lo{0};
  F g_hi{1};
  if (x == lo) return g_lo;
  if (x == hi) return g_hi;
  while (true) {
    Rational mid = mediant(lo, hi);
    F g_mid = g_lo + (g_hi - g_lo) * lambda;
    auto cmp = x <=> mid;
    if (cmp == 0) return g_mid;
    if (cmp < 0) {
      hi = std::move(mid);
      g_hi = std::move(g_mid);
    } else {
      lo = std::move(mid);
      g_lo = std::move(g_mid);
    }
  }
}

GValue g_inductive(const Rational& x, const Lambda& lambda);

/// Salem's series ?(x) = 2^{1-a1} - 2^{1-a1-a2} + ... for a finite expansion.
Rational question_mark(const RegularCF& x);

/// Finite alternating sum whose k-th term has magnitude
/// lambda^{(sum of odd-indexed a_i, i <= k) - 1} (1 - lambda)^{(sum of even-indexed a_i, i <= k)}.
template <ExactField F>
F g_series(const RegularCF& x, const F& lambda) {
  detail::check_lambda(lambda);
  if (x.is_one()) return F{1};
  const F complement = F{1} - lambda;
  auto a = x.quotients();
  F term = power(lambda, a[0] - 1);
  F sum = term;
  for (std::size_t i = 1; i < a.size(); ++i) {
    bool even_index = i % 2 == 1;  // a_{i+1}
    term *= power(even_index ? complement : lambda, a[i]);
    if (even_index) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

GValue g_series(const RegularCF& x, const Lambda& lambda);

/// g_series over a rational argument in [0, 1]; g(0) = 0.
template <ExactField F>
F g_series(const Rational& x, const F& lambda) {
  if (x.is_zero()) {
    detail::check_lambda(lambda);
    return F{0};
  }
  return g_series(expand_rcf(x), lambda);
}

GValue g_series(const Rational& x, const Lambda& lambda);

/// g at lambda = tau^2 as sum (-1)^{k+1} tau^{e_k - 2}, e_k = sum_{i<=k} alpha_i a_i
/// with alpha_i = 2 for odd i and 1 for even i.
QuadSurd g_tau2(const RegularCF& x);
QuadSurd g_tau2(const Rational& x);

/// Source of partial quotients; std::nullopt marks the end of the stream.
using QuotientStream = std::function<std::optional<Digit>()>;

/// Bracket [lower, upper] around g_lambda(x) produced from a quotient stream.
struct GEnclosure {
  GValue lower;
  GValue upper;
  std::size_t terms = 0;

  GValue width() const;
  /// "[lower, upper]" in decimal.
  std::string str(unsigned digits) const;
};

/// Thrown by g_stream when the quotients run out before the tolerance is met.
class StreamExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sums the series term by term until the latest term has magnitude <= epsilon.
/// Terms alternate in sign and strictly shrink, so g lies between the last two
/// partial sums, which form the returned enclosure of width <= epsilon.
GEnclosure g_stream(const QuotientStream& quotients, const Lambda& lambda, const Rational& epsilon);

}  // namespace singular
