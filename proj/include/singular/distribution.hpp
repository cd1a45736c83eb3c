#pragma once

// Empirical distribution functions of the Stern-Brocot sequences F_n and
// of Xi_n, and the subtree-count ratios that drive them towards g_{tau^2}.

#include <string>
#include <vector>

#include "singular/quad_surd.hpp"
#include "singular/rational.hpp"

namespace singular {

enum class SequenceKind { stern_brocot, xi };

/// Largest Xi_n index that verify_theorem1 materializes.
inline constexpr unsigned kMaxMaterializedXi = 30;

/// x |-> #{xi in S : xi <= x} / #S over a sorted sequence S.
class EmpiricalCDF {
 public:
  /// Generates F_n or Xi_n.
  EmpiricalCDF(SequenceKind kind, unsigned n);
  /// Takes an already sorted sequence.
  EmpiricalCDF(SequenceKind kind, unsigned n, std::vector<Rational> sorted);

  SequenceKind kind() const noexcept { return kind_; }
  unsigned index() const noexcept { return n_; }
  const std::vector<Rational>& elements() const noexcept { return elements_; }

  std::size_t rank(const Rational& x) const;
  Rational operator()(const Rational& x) const;

 private:
  SequenceKind kind_;
  unsigned n_;
  std::vector<Rational> elements_;
};

Rational empirical_cdf(SequenceKind kind, unsigned n, const Rational& x);

struct Theorem1Row {
  unsigned n = 0;
  Rational empirical;
  QuadSurd target;
  QuadSurd abs_error;
  /// abs_error to 30 digits.
  std::string abs_error_decimal;
};

struct Theorem1Report {
  Rational x;
  Rational tolerance;
  std::vector<Theorem1Row> rows;
  /// Final-row error <= tolerance.
  bool passed = false;
};

/// Rows n = 2..n_max comparing the Xi_n empirical CDF at x with g_{tau^2}(x).
/// Requires 0 < x < 1 and 2 <= n_max <= kMaxMaterializedXi.
Theorem1Report verify_theorem1(const Rational& x, unsigned n_max, const Rational& tolerance);

/// #D^{(v^l)}_m / #D^{(v)}_m for v = x (+) y, where x < y are neighbours in
/// Xi_{n_of_pair}. Throws std::invalid_argument for a non-neighbouring pair
/// and std::domain_error when m < level(v).
Rational mediant_ratio(const Rational& x, const Rational& y, unsigned n_of_pair, unsigned m);

/// F_j / F_{j+2}.
Rational fibonacci_ratio_limit(unsigned j);

}  // namespace singular
