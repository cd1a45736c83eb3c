#pragma once

// Stern-Brocot sequences F_n on [0, 1] and their new-mediant layers Q_n.

#include <vector>

#include "singular/rational.hpp"

namespace singular {

/// F_n as a sorted array: 2^n + 1 fractions from 0/1 to 1/1 in which each
/// neighbouring pair x < y satisfies q_x p_y - p_x q_y = 1.
class SternBrocotLevel {
 public:
  /// F_0 = {0/1, 1/1}.
  SternBrocotLevel();

  unsigned index() const noexcept { return index_; }
  const std::vector<Rational>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }

  friend SternBrocotLevel next_level(const SternBrocotLevel& level);

 private:
  SternBrocotLevel(unsigned index, std::vector<Rational> elements)
      : index_(index), elements_(std::move(elements)) {}

  unsigned index_ = 0;
  std::vector<Rational> elements_;
};

/// F_{n+1}: a mediant inserted into every gap of F_n.
SternBrocotLevel next_level(const SternBrocotLevel& level);

/// F_n, built from F_0 by n refinements.
SternBrocotLevel stern_brocot_level(unsigned n);

/// Q_n (n >= 1) in increasing order: the 2^(n-1) fractions new in F_n.
std::vector<Rational> new_mediants(unsigned n);

/// The unique n with x in Q_n, i.e. S(x) - 1. Requires 0 < x < 1.
unsigned characterize_qn(const Rational& x);

}  // namespace singular
