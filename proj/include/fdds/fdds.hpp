#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fdds/tree.hpp"

namespace fdds {

/// Connected FDDS: a cycle of length p with one transient in-tree rooted at
/// each cyclic state (the tree includes the cyclic state as its root, so a
/// bare cyclic state is the single-node tree). The spine sequence is stored
/// in cycle order and normalized to its least rotation, so equal components
/// are isomorphic functional digraphs.
class Component {
 public:
  Component(std::uint32_t cycle_len, std::vector<Tree> spine);

  static Component cycle(std::uint32_t p);

  std::uint32_t cycle_len() const { return cycle_len_; }
  const std::vector<Tree>& spine() const { return spine_; }
  int depth() const;  // max transient tree depth; 0 for a bare cycle
  std::int64_t node_count() const;
  bool is_dendron() const { return cycle_len_ == 1; }

  friend bool operator==(const Component& a, const Component& b) {
    return a.cycle_len_ == b.cycle_len_ && a.spine_ == b.spine_;
  }
  /// Structural storage order (cycle length, then spine lexicographic by the
  /// tree order). Not the semantic component orders; see compare_cyclefirst.
  friend std::strong_ordering operator<=>(const Component& a,
                                          const Component& b);

 private:
  std::uint32_t cycle_len_;
  std::vector<Tree> spine_;
};

/// FDDS up to isomorphism: counted multiset of components in canonical form.
class Fdds {
 public:
  using Item = std::pair<Component, std::uint64_t>;

  Fdds() = default;
  explicit Fdds(const std::vector<Component>& comps);

  static Fdds cycle(std::uint32_t p, std::uint64_t count = 1);

  void add(const Component& c, std::uint64_t count = 1);

  bool empty() const { return comps_.empty(); }
  const std::vector<Item>& components() const { return comps_; }
  std::uint64_t component_count() const;  // total multiplicity
  std::int64_t node_count() const;
  std::uint64_t periodic_count() const;  // number of periodic states
  int depth() const;                     // 0 for the empty FDDS

  friend Fdds operator+(const Fdds& a, const Fdds& b);
  friend Fdds operator*(const Fdds& a, const Fdds& b);
  friend bool operator==(const Fdds& a, const Fdds& b) {
    return a.comps_ == b.comps_;
  }

 private:
  std::vector<Item> comps_;
};

Fdds fdds_sum(const Fdds& a, const Fdds& b);
Fdds fdds_product(const Fdds& a, const Fdds& b);
Fdds fdds_power(const Fdds& x, unsigned k);  // k >= 1

/// Multiset difference b - a when a is a sub-multiset of b, absent otherwise.
std::optional<Fdds> fdds_subtract(const Fdds& b, const Fdds& a);

/// Components with cycle length dividing p / exactly p.
Fdds set_dive(const Fdds& x, std::uint32_t p);
Fdds set_size(const Fdds& x, std::uint32_t p);

bool is_dendron(const Component& c);
/// A is cancelable (AB = AC implies B = C) iff some component is a dendron.
bool is_cancelable(const Fdds& a);

/// Component order by (cycle length, minimal unroll tree).
std::strong_ordering compare_cyclefirst(const Component& a, const Component& b);
/// Component order by (minimal unroll tree, cycle length).
std::strong_ordering compare_treefirst(const Component& a, const Component& b);

/// Accepts an edge list ("u v" per line, meaning f(u) = v, every vertex with
/// out-degree exactly one) or a component literal ("2*1:[()]+2:[(),()]").
/// Lines may carry '#' comments. Throws MalformedInput.
Fdds parse_fdds(std::string_view text);

/// Re-normalizes a value; idempotent (values are canonical by construction).
Fdds canonicalize(const Fdds& x);

/// Canonical component-literal emission, e.g. "2*1:[()]+2:[(),()]".
std::string to_literal(const Fdds& x);

/// DOT digraph; periodic states are drawn as a styled cycle with
/// deterministic node names derived from the canonical order.
std::string to_dot(const Fdds& x);

namespace detail {
/// Decomposes an explicit functional graph (f[v] = successor) into canonical
/// components. Shared by parsing and the direct product.
Fdds decompose(const std::vector<int>& f);
/// Explicit digraph of a component: cyclic states first (i -> i+1 mod p).
std::vector<int> expand(const Component& c);
}  // namespace detail

}  // namespace fdds
