#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "permsort/budget.hpp"
#include "permsort/permutation.hpp"

namespace permsort {

/// Unlabelled binary tree, stored as its preorder code with '1' for a
/// vertex and '0' for an empty subtree. The empty tree is "0".
class TreeShape {
 public:
  TreeShape() = default;
  explicit TreeShape(std::string code) : code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }
  bool empty() const noexcept { return code_ == "0"; }

  friend bool operator==(const TreeShape&, const TreeShape&) = default;
  friend auto operator<=>(const TreeShape&, const TreeShape&) = default;

 private:
  std::string code_ = "0";
};

/// Binary tree with distinct positive labels where every child is smaller
/// than its parent. Children are stored per label; 0 means "no child".
/// Instances are always decreasing: the only ways to build one check it.
class DecreasingTree {
 public:
  DecreasingTree() = default;

  static DecreasingTree leaf(int label);

  /// Throws std::invalid_argument if a child root is not below `label` or
  /// labels repeat.
  static DecreasingTree node(int label, const DecreasingTree& left, const DecreasingTree& right);

  bool empty() const noexcept { return root_ == 0; }
  int root() const noexcept { return root_; }
  int size() const noexcept { return size_; }
  bool has(int label) const noexcept;
  int left(int label) const noexcept { return has(label) ? left_[label] : 0; }
  int right(int label) const noexcept { return has(label) ? right_[label] : 0; }
  int parent(int label) const noexcept { return has(label) ? parent_[label] : 0; }

  /// Labels in in-order.
  std::vector<int> labels() const;

  friend bool operator==(const DecreasingTree&, const DecreasingTree&) = default;
  friend auto operator<=>(const DecreasingTree&, const DecreasingTree&) = default;

 private:
  friend struct TreeAccess;

  int root_ = 0;
  int size_ = 0;
  // Indexed by label, sized root_ + 1.
  std::vector<int> left_;
  std::vector<int> right_;
  std::vector<int> parent_;
};

/// The unique decreasing tree whose in-order reading is `perm`.
DecreasingTree tin(const Permutation& perm);

/// In-order (left, root, right) label word.
std::vector<int> in_order_word(const DecreasingTree& tree);
/// Post-order (left, right, root) label word.
std::vector<int> post_order_word(const DecreasingTree& tree);

/// Readings of trees labelled by exactly 1..n; throws InvalidPermutation
/// otherwise.
Permutation in_order(const DecreasingTree& tree);
Permutation post_order(const DecreasingTree& tree);

/// Stack sorting, computed as the post-order reading of tin(perm).
Permutation apply_S(const Permutation& perm);

/// Stack sorting by the direct recursion S(a n b) = S(a) S(b) n.
Permutation apply_S_recursive(const Permutation& perm);

TreeShape shape(const DecreasingTree& tree);

/// Every vertex with a left child x also has a right child, and the
/// leftmost label below that right child is smaller than x.
bool is_canonical(const DecreasingTree& tree);

/// All decreasing trees with post-order reading `tau`, in no particular
/// order. Empty iff tau is not in the image of S. Each generated tree
/// (including memoized subtrees) is charged to `budget` when given.
std::vector<DecreasingTree> trees_with_postorder(const Permutation& tau, Budget* budget = nullptr);

/// True iff some decreasing tree has post-order `tau`, i.e. tau is in the
/// image of S. Polynomial; does not enumerate trees.
bool is_stack_sorting_image(const Permutation& tau);

/// The canonical tree of tau, or nullopt when tau is not in the image of S.
/// Throws std::logic_error if more than one canonical tree is found.
std::optional<DecreasingTree> canonical_tree(const Permutation& tau);

/// Trees reachable from `tree` by one move: take a vertex z with no left
/// child, detach a vertex y on the leftmost branch of z's right subtree
/// (with its subtree) and hang it as z's left subtree.
std::vector<DecreasingTree> star_moves(const DecreasingTree& tree);

/// Closure of `tree` under star_moves, including `tree`, sorted.
/// Throws PreconditionError if `tree` is not canonical.
std::vector<DecreasingTree> star_expansions(const DecreasingTree& tree);

/// S^{-1}(tau), sorted lexicographically.
std::vector<Permutation> preimages_S(const Permutation& tau, Budget* budget = nullptr);

/// Applies the value map label -> map[label - 1] to every vertex. Returns
/// nullopt when the relabelled tree is not decreasing.
std::optional<DecreasingTree> relabel(const DecreasingTree& tree, const Permutation& map);

/// Graphviz digraph. Node ids are labels; the left edge of a vertex is
/// emitted before its right edge, and a lone child gets an invisible
/// sibling placeholder so its side stays visible.
std::string to_dot(const DecreasingTree& tree, const std::string& graph_name = "T");

}  // namespace permsort
