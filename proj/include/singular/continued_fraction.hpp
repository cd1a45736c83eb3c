#pragma once

// Regular continued fractions [0; a1, ..., am] and regular reduced
// continued fractions [[1; b1, ..., bl]] = 1 - 1/(b1 - 1/(b2 - ...)).

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "singular/rational.hpp"

namespace singular {

using Digit = std::uint64_t;

/// Canonical regular continued fraction of a rational in (0, 1].
///
/// All quotients are >= 1 and the last one is >= 2. The value 1 is the
/// empty quotient list; its text form is "[0;1]".
class RegularCF {
 public:
  RegularCF() = default;
  /// Throws std::invalid_argument unless the list is canonical.
  explicit RegularCF(std::vector<Digit> quotients);

  /// Parses "[0;a1,a2,...]" (no spaces). "[0;1]" denotes 1.
  static RegularCF parse(std::string_view text);

  std::span<const Digit> quotients() const noexcept { return quotients_; }
  std::size_t size() const noexcept { return quotients_.size(); }
  bool is_one() const noexcept { return quotients_.empty(); }

  std::string str() const;

  friend bool operator==(const RegularCF&, const RegularCF&) = default;

 private:
  std::vector<Digit> quotients_;
};

/// Regular reduced continued fraction of a rational in (0, 1); every digit
/// is >= 2 and the list is non-empty.
class ReducedRCF {
 public:
  /// Throws std::invalid_argument on an empty list or a digit below 2.
  explicit ReducedRCF(std::vector<Digit> digits);

  /// Parses "[[1;b1,b2,...]]" (no spaces).
  static ReducedRCF parse(std::string_view text);

  std::span<const Digit> digits() const noexcept { return digits_; }
  std::size_t size() const noexcept { return digits_.size(); }

  std::string str() const;

  friend bool operator==(const ReducedRCF&, const ReducedRCF&) = default;

 private:
  std::vector<Digit> digits_;
};

/// Euclidean expansion of 0 < x <= 1. Throws std::domain_error outside that
/// range and std::overflow_error if a quotient does not fit in a Digit.
RegularCF expand_rcf(const Rational& x);

Rational value_rcf(const RegularCF& cf);

/// S(x) = a1 + ... + am; S(1) is taken as 1 through the [0;1] reading.
std::uint64_t sum_partial_quotients(const RegularCF& cf);

/// Reduced expansion of 0 < x < 1, computed as rcf_to_rrcf(expand_rcf(x)).
ReducedRCF expand_rrcf(const Rational& x);

Rational value_rrcf(const ReducedRCF& rcf);

/// Rewrites a regular expansion into the reduced one, block by block:
/// an odd-indexed a_i becomes a_i - 1 copies of 2, an even-indexed a_i
/// becomes a_i + 2, or a_i + 1 when it is the last quotient.
ReducedRCF rcf_to_rrcf(const RegularCF& cf);

/// L(x) = b1 + ... + bl.
std::uint64_t digit_sum_L(const ReducedRCF& rcf);

}  // namespace singular
