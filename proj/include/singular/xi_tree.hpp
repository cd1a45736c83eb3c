#pragma once

// The families Theta_k = {x in (0,1) rational : L(x) = k + 1}, the sequences
// Xi_n = {0, 1} u Theta_1 u ... u Theta_n, and the binary tree D rooted at
// 1/2 whose level-k nodes are exactly Theta_k.
//
// In D a node [[1; b1, ..., bs]] has a left child [[1; b1, ..., bs, 2]] two
// levels down and a right child [[1; b1, ..., bs + 1]] one level down.

#include <cstdint>
#include <vector>

#include "singular/continued_fraction.hpp"
#include "singular/rational.hpp"

namespace singular {

class XiTreeNode {
 public:
  explicit XiTreeNode(ReducedRCF digits);

  /// 1/2 = [[1;2]], the only node at level 1.
  static XiTreeNode root();

  const Rational& value() const noexcept { return value_; }
  const ReducedRCF& digits() const noexcept { return digits_; }
  /// k such that value() is in Theta_k, i.e. L - 1.
  unsigned level() const noexcept { return level_; }

 private:
  XiTreeNode(ReducedRCF digits, Rational value, unsigned level)
      : digits_(std::move(digits)), value_(std::move(value)), level_(level) {}

  friend XiTreeNode left_child(const XiTreeNode& node);
  friend XiTreeNode right_child(const XiTreeNode& node);

  ReducedRCF digits_;
  Rational value_;
  unsigned level_;
};

/// Appends a digit 2; level + 2.
XiTreeNode left_child(const XiTreeNode& node);
/// Increments the last digit; level + 1.
XiTreeNode right_child(const XiTreeNode& node);

/// F_1 = F_2 = 1.
BigInt fibonacci(unsigned n);

/// Theta_k sorted by value, enumerated as the compositions of k + 1 into
/// parts >= 2.
std::vector<XiTreeNode> theta(unsigned k);

class XiSequence {
 public:
  unsigned index() const noexcept { return index_; }
  /// Increasing, from 0 to 1.
  const std::vector<Rational>& elements() const noexcept { return elements_; }
  /// Level of each element; 0 marks the endpoints 0 and 1.
  const std::vector<unsigned>& levels() const noexcept { return levels_; }
  std::size_t size() const noexcept { return elements_.size(); }

  friend XiSequence xi(unsigned n);
  friend XiSequence extend(const XiSequence& sequence, const std::vector<XiTreeNode>& next_theta);

 private:
  unsigned index_ = 0;
  std::vector<Rational> elements_;
  std::vector<unsigned> levels_;
};

/// Xi_n for n >= 1; F_{n+2} + 1 elements.
XiSequence xi(unsigned n);

/// Xi_{n+1} from Xi_n and Theta_{n+1} (sorted) by a linear merge.
XiSequence extend(const XiSequence& sequence, const std::vector<XiTreeNode>& next_theta);

/// Size of the subtree of a level-n node counted through level m:
/// #D_{m-n+1} = F_{m-n+3} - 1, and 0 when m < n.
BigInt subtree_count(unsigned node_level, unsigned up_to_level);

/// Depth-first walk of the subtree at `root`, visiting every node whose
/// level is at most `max_level` (the root included).
template <typename Visitor>
void traverse_subtree(const XiTreeNode& root, unsigned max_level, Visitor&& visit) {
  if (root.level() > max_level) return;
  visit(root);
  if (root.level() + 2 <= max_level) traverse_subtree(left_child(root), max_level, visit);
  if (root.level() + 1 <= max_level) traverse_subtree(right_child(root), max_level, visit);
}

/// counts[j] = number of subtree nodes at level j, for j in 0..max_level.
std::vector<std::uint64_t> subtree_level_counts(const XiTreeNode& root, unsigned max_level);

}  // namespace singular
