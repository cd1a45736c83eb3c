#include <algorithm>

#include <doctest.h>

#include "oracles.hpp"
#include "singular/continued_fraction.hpp"
#include "singular/quad_surd.hpp"
#include "singular/xi_tree.hpp"

using namespace singular;

namespace {

std::vector<Rational> values(const std::vector<XiTreeNode>& nodes) {
  std::vector<Rational> out;
  for (const auto& n : nodes) out.push_back(n.value());
  return out;
}

std::vector<Rational> sorted(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Theta_k by brute force: S(x) <= L(x) + 1, so Theta_k lies inside F_{k+1}.
std::vector<Rational> theta_brute_force(unsigned k) {
  std::vector<Rational> out;
  for (const auto& x : oracle::stern_brocot_interior(k + 1)) {
    std::uint64_t l = 0;
    for (auto b : oracle::ceiling_rrcf(x)) l += b;
    if (l == k + 1) out.push_back(x);
  }
  return sorted(out);
}

}  // namespace

TEST_CASE("fibonacci") {
  CHECK(fibonacci(1) == 1);
  CHECK(fibonacci(2) == 1);
  CHECK(fibonacci(10) == 55);
  CHECK(fibonacci(100) == BigInt("354224848179261915075"));
  CHECK_THROWS_AS(fibonacci(0), std::domain_error);
  const QuadSurd phi = QuadSurd::golden_ratio();
  const QuadSurd psi = QuadSurd(Rational{1}) - phi;
  for (unsigned n = 1; n <= 30; ++n) {
    QuadSurd binet = (quad_pow(phi, n) - quad_pow(psi, n)) / QuadSurd::sqrt5();
    REQUIRE(binet == QuadSurd(Rational(fibonacci(n))));
  }
}

TEST_CASE("children of tree nodes") {
  XiTreeNode root = XiTreeNode::root();
  CHECK(root.value() == Rational(1, 2));
  CHECK(root.level() == 1);

  XiTreeNode l = left_child(root);
  CHECK(l.digits() == ReducedRCF({2, 2}));
  CHECK(l.value() == Rational(1, 3));
  CHECK(l.level() == 3);

  XiTreeNode r = right_child(root);
  CHECK(r.digits() == ReducedRCF({3}));
  CHECK(r.value() == Rational(2, 3));
  CHECK(r.level() == 2);

  XiTreeNode rl = left_child(r);
  CHECK(rl.value() == Rational(3, 5));
  CHECK(rl.level() == 4);
  XiTreeNode rr = right_child(r);
  CHECK(rr.value() == Rational(3, 4));
  CHECK(rr.level() == 3);
  XiTreeNode lr = right_child(l);
  CHECK(lr.digits() == ReducedRCF({2, 3}));
  CHECK(lr.value() == Rational(2, 5));
  CHECK(lr.level() == 4);

  for (const auto& node : theta(9)) {
    CHECK(left_child(node).level() == node.level() + 2);
    CHECK(right_child(node).level() == node.level() + 1);
  }
}

TEST_CASE("theta examples") {
  CHECK(values(theta(1)) == std::vector<Rational>{Rational(1, 2)});
  CHECK(values(theta(2)) == std::vector<Rational>{Rational(2, 3)});
  CHECK(values(theta(3)) == std::vector<Rational>{Rational(1, 3), Rational(3, 4)});
  CHECK_THROWS_AS(theta(0), std::domain_error);
}

TEST_CASE("theta agrees with brute force over Stern-Brocot levels") {
  for (unsigned k = 1; k <= 14; ++k) REQUIRE(values(theta(k)) == theta_brute_force(k));
}

TEST_CASE("#Theta_n = F_n") {
  for (unsigned n = 1; n <= 22; ++n) REQUIRE(theta(n).size() == oracle::fibonacci_u64(n));
}

TEST_CASE("Theta_{n+1} splits into right children of Theta_n and left children of Theta_{n-1}") {
  std::vector<XiTreeNode> prev_nodes = theta(1);
  std::vector<XiTreeNode> curr_nodes = theta(2);
  for (unsigned n = 2; n <= 20; ++n) {
    std::vector<XiTreeNode> next_nodes = theta(n + 1);
    std::vector<Rational> from_right;
    std::vector<Rational> from_left;
    for (const auto& y : curr_nodes) from_right.push_back(right_child(y).value());
    for (const auto& y : prev_nodes) from_left.push_back(left_child(y).value());
    std::vector<Rational> both = from_right;
    both.insert(both.end(), from_left.begin(), from_left.end());
    both = sorted(both);
    REQUIRE(std::adjacent_find(both.begin(), both.end()) == both.end());  // disjoint
    REQUIRE(both == values(next_nodes));
    prev_nodes = std::move(curr_nodes);
    curr_nodes = std::move(next_nodes);
  }
}

TEST_CASE("children are the mediants with the neighbours in Xi_n") {
  XiSequence seq = xi(1);
  for (unsigned n = 1; n <= 15; ++n) {
    if (n > 1) seq = extend(seq, theta(n));
    const auto& e = seq.elements();
    std::vector<XiTreeNode> level = theta(n);
    for (const auto& y : level) {
      auto it = std::lower_bound(e.begin(), e.end(), y.value());
      REQUIRE(*it == y.value());
      const Rational& x = *(it - 1);
      const Rational& z = *(it + 1);
      XiTreeNode l = left_child(y);
      XiTreeNode r = right_child(y);
      REQUIRE(l.value() == mediant(x, y.value()));
      REQUIRE(l.level() == n + 2);
      REQUIRE(r.value() == mediant(y.value(), z));
      REQUIRE(r.level() == n + 1);
    }
  }
}

TEST_CASE("xi sequences") {
  XiSequence x1 = xi(1);
  CHECK(x1.elements() == std::vector<Rational>{Rational{0}, Rational(1, 2), Rational{1}});
  XiSequence x3 = xi(3);
  CHECK(x3.elements() == std::vector<Rational>{Rational{0}, Rational(1, 3), Rational(1, 2), Rational(2, 3),
                                               Rational(3, 4), Rational{1}});
  CHECK(x3.levels() == std::vector<unsigned>{0, 3, 1, 2, 3, 0});
  CHECK(xi(10).size() == 145);
  for (unsigned n = 1; n <= 20; ++n) {
    XiSequence s = xi(n);
    REQUIRE(s.size() == oracle::fibonacci_u64(n + 2) + 1);
    REQUIRE(std::adjacent_find(s.elements().begin(), s.elements().end(),
                               [](const Rational& a, const Rational& b) { return !(a < b); }) ==
            s.elements().end());
  }
  CHECK_THROWS_AS(xi(0), std::domain_error);
}

TEST_CASE("every node is a reduced fraction in (0, 1) matching its digits") {
  for (unsigned k = 1; k <= 16; ++k) {
    for (const auto& node : theta(k)) {
      REQUIRE(node.value().sign() > 0);
      REQUIRE(node.value() < Rational{1});
      REQUIRE(boost::multiprecision::gcd(node.value().numerator(), node.value().denominator()) == 1);
      REQUIRE(node.value() == value_rrcf(node.digits()));
      REQUIRE(node.level() == digit_sum_L(node.digits()) - 1);
      REQUIRE(expand_rrcf(node.value()) == node.digits());
    }
  }
}

TEST_CASE("subtree counts") {
  CHECK(subtree_count(1, 3) == 4);
  CHECK(subtree_count(4, 4) == 1);
  CHECK(subtree_count(2, 5) == 7);
  CHECK(subtree_count(5, 4) == 0);

  XiTreeNode two_thirds = right_child(XiTreeNode::root());
  auto counts = subtree_level_counts(two_thirds, 5);
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  CHECK(total == 7);

  for (unsigned k = 1; k <= 10; ++k) {
    for (const auto& root : theta(k)) {
      auto per_level = subtree_level_counts(root, 20);
      std::uint64_t cumulative = 0;
      for (unsigned m = 0; m <= 20; ++m) {
        cumulative += per_level[m];
        REQUIRE(BigInt(cumulative) == subtree_count(k, m));
      }
    }
  }
}

TEST_CASE("tree traversal from the root reaches exactly Theta_1 .. Theta_n") {
  std::vector<std::vector<Rational>> by_level(19);
  traverse_subtree(XiTreeNode::root(), 18, [&](const XiTreeNode& node) { by_level[node.level()].push_back(node.value()); });
  for (unsigned k = 1; k <= 18; ++k) REQUIRE(sorted(by_level[k]) == values(theta(k)));
}
