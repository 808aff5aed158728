#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fdds/tree.hpp"

namespace fdds {

/// Multiset of trees with counted representation (distinct trees kept in
/// ascending order). The empty forest is the additive neutral element; its
/// depth is the -1 sentinel so gamma and max() stay total.
class Forest {
 public:
  using Item = std::pair<Tree, std::uint64_t>;

  Forest() = default;
  explicit Forest(const std::vector<Tree>& trees);

  static Forest single(Tree t, std::uint64_t count = 1);

  bool empty() const { return items_.empty(); }
  const std::vector<Item>& items() const { return items_; }
  std::uint64_t tree_count() const;   // total multiplicity
  std::int64_t node_count() const;    // total vertices
  int depth() const;                  // -1 for the empty forest
  Tree min_tree() const;              // requires nonempty
  std::uint64_t count_of(Tree t) const;

  void add(Tree t, std::uint64_t count = 1);

  /// Expands the multiset into an explicit vector (use only when small).
  std::vector<Tree> expand() const;

  friend Forest operator+(const Forest& a, const Forest& b);
  friend Forest operator*(const Forest& a, const Forest& b);
  friend bool operator==(const Forest& a, const Forest& b) {
    return a.items_ == b.items_;
  }

 private:
  std::vector<Item> items_;
};

/// Multiset difference b - a when a is a sub-multiset of b, absent otherwise.
std::optional<Forest> forest_subtract(const Forest& b, const Forest& a);

Forest forest_sum(const Forest& a, const Forest& b);
Forest forest_product(const Forest& a, const Forest& b);

/// k-fold product. By convention the 0-th power is the single path of
/// depth(f), the multiplicative identity for forests of depth <= depth(f).
Forest forest_power(const Forest& f, unsigned k);

/// Sub-multiset of trees of depth at least d.
Forest gamma(const Forest& f, int d);

/// Elementwise cut at depth k.
Forest cut(const Forest& f, int k);

/// One tree literal per line; '#' starts a comment; blank lines ignored.
Forest parse_forest(std::string_view text);

/// Inline form: tree words joined by '+'. Accepts the file form too.
Forest parse_forest_inline(std::string_view text);

/// Canonical emission, ascending, one tree per line with a count prefix
/// expanded (each copy on its own line).
std::string forest_to_lines(const Forest& f);

/// Canonical inline emission: words joined by '+', repeats expanded.
std::string forest_to_inline(const Forest& f);

}  // namespace fdds
