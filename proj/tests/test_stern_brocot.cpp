#include <algorithm>

#include <doctest.h>

#include "oracles.hpp"
#include "singular/continued_fraction.hpp"
#include "singular/stern_brocot.hpp"

using namespace singular;

namespace {

std::vector<Rational> sorted(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("first levels") {
  SternBrocotLevel f0;
  CHECK(f0.index() == 0);
  CHECK(f0.elements() == std::vector<Rational>{Rational{0}, Rational{1}});
  SternBrocotLevel f1 = next_level(f0);
  CHECK(f1.elements() == std::vector<Rational>{Rational{0}, Rational(1, 2), Rational{1}});
  SternBrocotLevel f2 = next_level(f1);
  CHECK(f2.elements() ==
        std::vector<Rational>{Rational{0}, Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational{1}});
  CHECK(next_level(f2).size() == 9);
  CHECK(f2.index() == 2);
}

TEST_CASE("new mediant layers") {
  CHECK(new_mediants(1) == std::vector<Rational>{Rational(1, 2)});
  CHECK(new_mediants(2) == std::vector<Rational>{Rational(1, 3), Rational(2, 3)});
  CHECK(new_mediants(3) == std::vector<Rational>{Rational(1, 4), Rational(2, 5), Rational(3, 5), Rational(3, 4)});
  CHECK_THROWS_AS(new_mediants(0), std::domain_error);
}

TEST_CASE("level structure: size, order, unimodular neighbours, endpoints") {
  SternBrocotLevel level;
  for (unsigned n = 0; n <= 16; ++n) {
    const auto& e = level.elements();
    REQUIRE(e.size() == (std::size_t{1} << n) + 1);
    REQUIRE(e.front() == Rational{0});
    REQUIRE(e.back() == Rational{1});
    for (std::size_t j = 1; j < e.size(); ++j) {
      REQUIRE(e[j - 1] < e[j]);
      REQUIRE(e[j - 1].denominator() * e[j].numerator() - e[j - 1].numerator() * e[j].denominator() == 1);
    }
    level = next_level(level);
  }
}

TEST_CASE("Q_n is exactly the set of rationals with partial-quotient sum n + 1") {
  for (unsigned n = 1; n <= 14; ++n) {
    auto layer = new_mediants(n);
    REQUIRE(layer.size() == (std::size_t{1} << (n - 1)));
    REQUIRE(std::is_sorted(layer.begin(), layer.end()));
    REQUIRE(layer == sorted(oracle::rationals_with_quotient_sum(n + 1)));
  }
}

TEST_CASE("F_n is {0, 1} together with all rationals of partial-quotient sum at most n + 1") {
  for (unsigned n = 0; n <= 14; ++n) {
    std::vector<Rational> expected{Rational{0}, Rational{1}};
    for (unsigned s = 2; s <= n + 1; ++s) {
      auto part = oracle::rationals_with_quotient_sum(s);
      expected.insert(expected.end(), part.begin(), part.end());
    }
    REQUIRE(stern_brocot_level(n).elements() == sorted(expected));
  }
}

TEST_CASE("characterize_qn") {
  CHECK(characterize_qn(Rational(1, 2)) == 1);
  CHECK(characterize_qn(Rational(2, 3)) == 2);
  CHECK(characterize_qn(Rational(3, 5)) == 3);
  auto q2 = new_mediants(2);
  auto q3 = new_mediants(3);
  CHECK(std::find(q2.begin(), q2.end(), Rational(2, 3)) != q2.end());
  CHECK(std::find(q3.begin(), q3.end(), Rational(3, 5)) != q3.end());
  for (unsigned n = 1; n <= 10; ++n) {
    for (const auto& x : new_mediants(n)) REQUIRE(characterize_qn(x) == n);
  }
  CHECK_THROWS_AS(characterize_qn(Rational{0}), std::domain_error);
  CHECK_THROWS_AS(characterize_qn(Rational{1}), std::domain_error);
}
