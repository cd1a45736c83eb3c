#include "singular/distribution.hpp"

#include <algorithm>
#include <stdexcept>

#include "singular/continued_fraction.hpp"
#include "singular/singular_function.hpp"
#include "singular/stern_brocot.hpp"
#include "singular/xi_tree.hpp"

namespace singular {
namespace {

std::vector<Rational> generate(SequenceKind kind, unsigned n) {
  if (kind == SequenceKind::stern_brocot) return stern_brocot_level(n).elements();
  return xi(n).elements();
}

}  // namespace

EmpiricalCDF::EmpiricalCDF(SequenceKind kind, unsigned n) : EmpiricalCDF(kind, n, generate(kind, n)) {}

EmpiricalCDF::EmpiricalCDF(SequenceKind kind, unsigned n, std::vector<Rational> sorted)
    : kind_(kind), n_(n), elements_(std::move(sorted)) {
  if (elements_.empty()) throw std::invalid_argument("empirical CDF over an empty sequence");
}

std::size_t EmpiricalCDF::rank(const Rational& x) const {
  return static_cast<std::size_t>(std::upper_bound(elements_.begin(), elements_.end(), x) - elements_.begin());
}

Rational EmpiricalCDF::operator()(const Rational& x) const {
  return Rational(BigInt(rank(x)), BigInt(elements_.size()));
}

Rational empirical_cdf(SequenceKind kind, unsigned n, const Rational& x) {
  return EmpiricalCDF(kind, n)(x);
}

Theorem1Report verify_theorem1(const Rational& x, unsigned n_max, const Rational& tolerance) {
  if (x.sign() <= 0 || x >= Rational{1}) throw std::domain_error("verify_theorem1 needs 0 < x < 1");
  if (n_max < 2) throw std::domain_error("verify_theorem1 needs n_max >= 2");
  if (n_max > kMaxMaterializedXi) {
    throw std::length_error("Xi_" + std::to_string(n_max) + " exceeds the materialization cap of " +
                            std::to_string(kMaxMaterializedXi));
  }
  Theorem1Report report;
  report.x = x;
  report.tolerance = tolerance;
  const QuadSurd target = g_tau2(x);

  XiSequence seq = xi(1);
  for (unsigned n = 2; n <= n_max; ++n) {
    seq = extend(seq, theta(n));
    EmpiricalCDF cdf(SequenceKind::xi, n, seq.elements());
    Theorem1Row row;
    row.n = n;
    row.empirical = cdf(x);
    row.target = target;
    row.abs_error = (QuadSurd(row.empirical) - target).abs();
    row.abs_error_decimal = to_decimal(row.abs_error, 30);
    report.rows.push_back(std::move(row));
  }
  report.passed = report.rows.back().abs_error <= QuadSurd(tolerance);
  return report;
}

Rational mediant_ratio(const Rational& x, const Rational& y, unsigned n_of_pair, unsigned m) {
  if (!(x < y)) throw std::invalid_argument("mediant_ratio needs x < y");
  XiSequence seq = xi(n_of_pair);
  const auto& elems = seq.elements();
  auto it = std::lower_bound(elems.begin(), elems.end(), x);
  if (it == elems.end() || *it != x || it + 1 == elems.end() || *(it + 1) != y) {
    throw std::invalid_argument(x.str() + " and " + y.str() + " are not neighbours in Xi_" +
                                std::to_string(n_of_pair));
  }
  Rational v = mediant(x, y);
  auto k = static_cast<unsigned>(digit_sum_L(expand_rrcf(v)) - 1);
  if (m < k) throw std::domain_error("mediant_ratio needs m >= level(x (+) y)");
  BigInt left = subtree_count(k + 2, m);
  BigInt whole = subtree_count(k, m);
  return Rational(std::move(left), std::move(whole));
}

Rational fibonacci_ratio_limit(unsigned j) {
  return Rational(fibonacci(j), fibonacci(j + 2));
}

}  // namespace singular
