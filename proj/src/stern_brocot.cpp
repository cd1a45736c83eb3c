#include "singular/stern_brocot.hpp"

#include <stdexcept>

#include "singular/continued_fraction.hpp"

namespace singular {

SternBrocotLevel::SternBrocotLevel() : elements_{Rational{0}, Rational{1}} {}

SternBrocotLevel next_level(const SternBrocotLevel& level) {
  const auto& old = level.elements();
  std::vector<Rational> refined;
  refined.reserve(2 * old.size() - 1);
  refined.push_back(old.front());
  for (std::size_t j = 1; j < old.size(); ++j) {
    refined.push_back(mediant(old[j - 1], old[j]));
    refined.push_back(old[j]);
  }
  return SternBrocotLevel(level.index() + 1, std::move(refined));
}

SternBrocotLevel stern_brocot_level(unsigned n) {
  if (n > 40) throw std::length_error("Stern-Brocot level " + std::to_string(n) + " is too large to materialize");
  SternBrocotLevel level;
  for (unsigned i = 0; i < n; ++i) level = next_level(level);
  return level;
}

std::vector<Rational> new_mediants(unsigned n) {
  if (n == 0) throw std::domain_error("Q_n is defined for n >= 1");
  SternBrocotLevel previous = stern_brocot_level(n - 1);
  const auto& elems = previous.elements();
  std::vector<Rational> layer;
  layer.reserve(elems.size() - 1);
  for (std::size_t j = 1; j < elems.size(); ++j) layer.push_back(mediant(elems[j - 1], elems[j]));
  return layer;
}

unsigned characterize_qn(const Rational& x) {
  if (x.sign() <= 0 || x >= Rational{1}) {
    throw std::domain_error("only rationals in (0, 1) belong to some Q_n, got " + x.str());
  }
  return static_cast<unsigned>(sum_partial_quotients(expand_rcf(x)) - 1);
}

}  // namespace singular
