#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fdds {

using TreeId = std::uint32_t;

/// Handle to an interned finite rooted unordered tree.
///
/// Trees are hash-consed in a process-wide pool: two handles are equal iff
/// the trees are isomorphic, so equality is O(1). depth (edges from the root
/// to the deepest leaf; a single node has depth 0) and size (node count) are
/// cached at construction. The ordering is the total order used throughout:
/// trees are compared at the shallowest cut depth where they differ, so the
/// comparison of two trees never flips when both are cut or extended below
/// that depth.
class Tree {
 public:
  Tree();  // single node

  static Tree leaf();
  static Tree node(const std::vector<Tree>& children);
  static Tree path(int depth);
  static Tree from_id(TreeId id);

  TreeId id() const { return id_; }
  int depth() const;
  std::int64_t size() const;
  std::vector<Tree> children() const;
  std::size_t child_count() const;
  bool is_leaf() const { return child_count() == 0; }
  bool is_path() const;  // size == depth + 1

  friend bool operator==(Tree a, Tree b) { return a.id_ == b.id_; }
  friend std::strong_ordering operator<=>(Tree a, Tree b);

 private:
  explicit Tree(TreeId id) : id_(id) {}
  TreeId id_;
};

/// Total order on trees; equal iff isomorphic. Compatible with the levelwise
/// product: cut(t1, depth t) <= cut(t2, depth t) iff t1*t <= t2*t.
std::strong_ordering tree_compare(Tree a, Tree b);

/// Levelwise product: vertices are pairs of equal-depth vertices, edges are
/// pairs of edges. depth(result) = min(depth a, depth b).
Tree tree_product(Tree a, Tree b);

/// k-fold product, k >= 1.
Tree tree_power(Tree t, unsigned k);

/// Induced subtree on vertices of depth <= k.
Tree cut(Tree t, int k);

/// Balanced-parenthesis word of the canonical form; children appear in
/// canonical (ascending) order, so equal codes iff isomorphic trees.
std::string canonical_code(Tree t);

/// Parses a balanced-parenthesis word; the result is canonical regardless of
/// the child order in the input. Throws MalformedInput.
Tree parse_tree(std::string_view word);

/// All x with depth(x) = depth(t) and a*x = t, up to isomorphism, sorted
/// ascending. Empty result means t is not divisible by a at this depth.
std::vector<Tree> tree_divide(Tree t, Tree a);

/// The x with x^k = t if one exists (unique; uniqueness is tested, not
/// assumed). k >= 1.
std::optional<Tree> kth_root(Tree t, unsigned k);

/// Clears the process-wide intern pool and every memo table. All outstanding
/// Tree handles (and values built from them) become invalid. Intended for
/// test drivers between independent heavyweight computations.
void reset_intern_pool();

}  // namespace fdds
