#ifndef HRD_GENTREE_HPP
#define HRD_GENTREE_HPP

#include "hrd/floorplan.hpp"
#include "hrd/permutation.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hrd {

/**
 * Skewed generating tree.
 *
 * A leaf has label 1 and no children. A node carries a simple Baxter
 * permutation of length l >= 2 and exactly l children, listed by position
 * in the permutation. Skew rule: the first child of a node labelled 12
 * (resp. 21) is not itself labelled 12 (resp. 21). The first child is the
 * alpha_1 slot of the canonical decomposition; the mirrored convention
 * counts the same trees.
 */
struct GenTree {
  Permutation label{1};
  std::vector<GenTree> children;
  /// FP2BP label of a leaf once the tree is attached to a floorplan.
  std::optional<int> room;

  static GenTree leaf() { return {}; }
  static GenTree node(Permutation label, std::vector<GenTree> children);

  bool is_leaf() const { return children.empty(); }
  int leaf_count() const;

  friend bool operator==(const GenTree &, const GenTree &) = default;
};

/// Throws std::invalid_argument unless k >= 2.
void require_order(int k);

/// Throws std::invalid_argument when `t` breaks arity, labelling or skew
/// invariants, or (when given) uses a label longer than k.
void check_tree(const GenTree &t, std::optional<int> k = std::nullopt);

/// Recursive inflation of node labels; a leaf is 1.
Permutation perm_of_tree(const GenTree &t);

/// The unique skewed tree of order k for a Baxter permutation, or nullopt
/// when some skeleton is longer than k. Throws for non-Baxter input.
std::optional<GenTree> tree_of_perm(const Permutation &p, int k);

/// Longest skeleton in the recursive decomposition (1 for a singleton);
/// nullopt when p is not Baxter. p is HRD_k exactly when this is <= k.
std::optional<int> hrd_order(const Permutation &p);

bool is_hrd(const Permutation &p, int k);
/// Baxter, simple and of length >= 2.
bool is_ihrd(const Permutation &p);

/// Copy whose leaves carry their FP2BP labels, left to right.
GenTree attach_leaf_labels(const GenTree &t);

/// Embeds bp2fp(label) realizations recursively into parent rooms.
MosaicFloorplan floorplan_of_tree(const GenTree &t);

/// Every skewed tree of order k with n leaves, once each. Ordered by root
/// label, then by child sizes, then by the children themselves.
std::vector<GenTree> enumerate_trees(int k, int n);

/// "." for a leaf, "(<label> <child> ...)" for a node, e.g.
/// "(41352 (12 . .) . . . .)".
std::string format_tree(const GenTree &t);
GenTree parse_tree(std::string_view text);

} // namespace hrd

#endif
