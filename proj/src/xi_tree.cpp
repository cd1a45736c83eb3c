#include "singular/xi_tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace singular {
namespace {

unsigned level_of(const ReducedRCF& digits) {
  return static_cast<unsigned>(digit_sum_L(digits) - 1);
}

void compositions(std::uint64_t remaining, std::vector<Digit>& prefix, std::vector<XiTreeNode>& out) {
  if (remaining == 0) {
    out.emplace_back(ReducedRCF(prefix));
    return;
  }
  for (Digit part = 2; part <= remaining; ++part) {
    // A tail of exactly 1 can never be completed.
    if (remaining - part == 1) continue;
    prefix.push_back(part);
    compositions(remaining - part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

XiTreeNode::XiTreeNode(ReducedRCF digits)
    : digits_(std::move(digits)), value_(value_rrcf(digits_)), level_(level_of(digits_)) {}

XiTreeNode XiTreeNode::root() { return XiTreeNode(ReducedRCF({2})); }

XiTreeNode left_child(const XiTreeNode& node) {
  std::vector<Digit> digits(node.digits().digits().begin(), node.digits().digits().end());
  digits.push_back(2);
  return XiTreeNode(ReducedRCF(std::move(digits)));
}

XiTreeNode right_child(const XiTreeNode& node) {
  std::vector<Digit> digits(node.digits().digits().begin(), node.digits().digits().end());
  digits.back() += 1;
  return XiTreeNode(ReducedRCF(std::move(digits)));
}

BigInt fibonacci(unsigned n) {
  if (n == 0) throw std::domain_error("fibonacci is indexed from 1");
  BigInt prev = 0;
  BigInt curr = 1;
  for (unsigned i = 1; i < n; ++i) {
    BigInt next = prev + curr;
    prev = std::move(curr);
    curr = std::move(next);
  }
  return curr;
}

std::vector<XiTreeNode> theta(unsigned k) {
  if (k == 0) throw std::domain_error("Theta_k is defined for k >= 1");
  std::vector<XiTreeNode> nodes;
  std::vector<Digit> prefix;
  compositions(std::uint64_t{k} + 1, prefix, nodes);
  std::sort(nodes.begin(), nodes.end(),
            [](const XiTreeNode& a, const XiTreeNode& b) { return a.value() < b.value(); });
  return nodes;
}

XiSequence extend(const XiSequence& sequence, const std::vector<XiTreeNode>& next_theta) {
  XiSequence out;
  out.index_ = sequence.index_ + 1;
  out.elements_.reserve(sequence.size() + next_theta.size());
  out.levels_.reserve(sequence.size() + next_theta.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < sequence.size() || j < next_theta.size()) {
    bool take_new = i == sequence.size() ||
                    (j < next_theta.size() && next_theta[j].value() < sequence.elements_[i]);
    if (take_new) {
      out.elements_.push_back(next_theta[j].value());
      out.levels_.push_back(next_theta[j].level());
      ++j;
    } else {
      out.elements_.push_back(sequence.elements_[i]);
      out.levels_.push_back(sequence.levels_[i]);
      ++i;
    }
  }
  return out;
}

XiSequence xi(unsigned n) {
  if (n == 0) throw std::domain_error("Xi_n is defined for n >= 1");
  XiSequence seq;
  seq.elements_ = {Rational{0}, Rational{1}};
  seq.levels_ = {0, 0};
  for (unsigned k = 1; k <= n; ++k) seq = extend(seq, theta(k));
  return seq;
}

BigInt subtree_count(unsigned node_level, unsigned up_to_level) {
  if (up_to_level < node_level) return 0;
  return fibonacci(up_to_level - node_level + 3) - 1;
}

std::vector<std::uint64_t> subtree_level_counts(const XiTreeNode& root, unsigned max_level) {
  std::vector<std::uint64_t> counts(max_level + 1, 0);
  traverse_subtree(root, max_level, [&](const XiTreeNode& node) { ++counts[node.level()]; });
  return counts;
}

}  // namespace singular
