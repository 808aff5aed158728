#include "fdds/unroll.hpp"

#include <algorithm>
#include <numeric>

#include "fdds/errors.hpp"

namespace fdds {

namespace {

// Cut unroll trees for all rotations at once, built level by level from the
// cut boundary up: the subtree at cyclic state j with remaining depth r has
// children = subtree at the cyclic predecessor with depth r-1 plus the
// transient children of j's tree, each cut at r-1.
std::vector<Tree> all_rotations_cut(const Component& c, int n) {
  unsigned p = c.cycle_len();
  std::vector<std::vector<Tree>> trans(p);
  for (unsigned j = 0; j < p; ++j) trans[j] = c.spine()[j].children();
  std::vector<Tree> cur(p, Tree::leaf());
  std::vector<Tree> next(p, Tree::leaf());
  for (int rem = 1; rem <= n; ++rem) {
    for (unsigned j = 0; j < p; ++j) {
      std::vector<Tree> kids;
      kids.reserve(trans[j].size() + 1);
      kids.push_back(cur[(j + p - 1) % p]);
      for (Tree t : trans[j]) kids.push_back(cut(t, rem - 1));
      next[j] = Tree::node(kids);
    }
    std::swap(cur, next);
  }
  return cur;
}

}  // namespace

Forest unroll_cut(const Component& c, int n) {
  if (n < 0) throw MalformedInput("cut depth must be non-negative");
  Forest out;
  for (Tree t : all_rotations_cut(c, n)) out.add(t);
  return out;
}

Forest unroll_cut(const Fdds& x, int n) {
  if (n < 0) throw MalformedInput("cut depth must be non-negative");
  Forest out;
  for (const auto& [c, k] : x.components()) {
    for (Tree t : all_rotations_cut(c, n)) out.add(t, k);
  }
  return out;
}

Tree unroll_tree_cut(const Component& c, unsigned rotation, int n) {
  if (rotation >= c.cycle_len()) throw MalformedInput("rotation out of range");
  return all_rotations_cut(c, n)[rotation];
}

Tree min_unroll_tree_cut(const Component& c, std::optional<int> n) {
  int depth = n.value_or(c.depth() + static_cast<int>(c.cycle_len()));
  std::vector<Tree> rots = all_rotations_cut(c, depth);
  return *std::min_element(rots.begin(), rots.end());
}

int default_cut_depth(const FddsPolynomial&, const Fdds& b) {
  std::uint64_t alpha = b.periodic_count();
  std::uint64_t n = 2 * alpha * alpha + static_cast<std::uint64_t>(b.depth());
  if (n > (1u << 22)) throw LimitExceeded("cut depth bound too large");
  return static_cast<int>(n);
}

std::optional<Component> reroll(Tree t, std::uint32_t p, int transient_bound) {
  if (p == 0) throw MalformedInput("reroll period must be positive");
  int n = t.depth();
  int d = transient_bound;
  if (d < 0 || n < d + 2 * static_cast<int>(p))
    throw MalformedInput("reroll needs depth(t) >= transient_bound + 2p");
  // Read decorations along the spine for levels [0, n-d): in that region the
  // spine child is the unique child reaching the cut boundary and every
  // decoration subtree is complete.
  std::vector<std::vector<Tree>> deco;
  deco.reserve(n - d);
  Tree cur = t;
  for (int k = 0; k + d < n; ++k) {
    std::vector<Tree> ch = cur.children();
    bool found = false;
    Tree spine;
    std::vector<Tree> rest;
    for (Tree c : ch) {
      if (c.depth() == n - k - 1) {
        if (found) return std::nullopt;  // two spines: not an unroll cut
        spine = c;
        found = true;
      } else {
        if (c.depth() > d - 1) return std::nullopt;  // decoration too deep
        rest.push_back(c);
      }
    }
    if (!found) return std::nullopt;
    std::sort(rest.begin(), rest.end());
    deco.push_back(std::move(rest));
    cur = spine;
  }
  for (std::size_t k = 0; k + p < deco.size(); ++k)
    if (deco[k] != deco[k + p]) return std::nullopt;  // not p-periodic
  int w = std::min(d, n - d - static_cast<int>(p));
  std::vector<Tree> spine_trees(p, Tree::leaf());
  for (std::uint32_t i = 0; i < p; ++i) {
    int lvl = w + static_cast<int>(i);
    int idx = ((-lvl) % static_cast<int>(p) + static_cast<int>(p)) %
              static_cast<int>(p);
    spine_trees[idx] = Tree::node(deco[lvl]);
  }
  Component c(p, std::move(spine_trees));
  for (std::uint32_t r = 0; r < p; ++r)
    if (unroll_tree_cut(c, r, n) == t) return c;
  return std::nullopt;
}

std::strong_ordering compare_cyclefirst(const Component& a,
                                        const Component& b) {
  if (a.cycle_len() != b.cycle_len()) return a.cycle_len() <=> b.cycle_len();
  int n = std::max(a.depth(), b.depth()) + 2 * static_cast<int>(a.cycle_len());
  return tree_compare(min_unroll_tree_cut(a, n), min_unroll_tree_cut(b, n));
}

std::strong_ordering compare_treefirst(const Component& a,
                                       const Component& b) {
  std::uint64_t l = std::lcm<std::uint64_t>(a.cycle_len(), b.cycle_len());
  if (l > (1u << 16)) throw LimitExceeded("cycle lengths too large to compare");
  int n = std::max(a.depth(), b.depth()) + 2 * static_cast<int>(l);
  auto c = tree_compare(min_unroll_tree_cut(a, n), min_unroll_tree_cut(b, n));
  if (c != 0) return c;
  return a.cycle_len() <=> b.cycle_len();
}

}  // namespace fdds
