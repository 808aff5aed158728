#include "fdds/oracle.hpp"

#include <algorithm>
#include <set>

#include "fdds/errors.hpp"

namespace fdds {

namespace {

constexpr int kMaxNodes = 10;

void check_bound(int n) {
  if (n > kMaxNodes) throw LimitExceeded("enumeration bound exceeds 10 nodes");
}

// trees of exactly each size 1..n; children are chosen as non-increasing
// pool-index multisets so every class is generated exactly once
std::vector<std::vector<Tree>> trees_by_size(int n) {
  std::vector<std::vector<Tree>> by_size(n + 1);
  if (n >= 1) by_size[1] = {Tree::leaf()};
  for (int s = 2; s <= n; ++s) {
    std::vector<Tree> pool;  // all trees of size < s
    for (int k = 1; k < s; ++k)
      pool.insert(pool.end(), by_size[k].begin(), by_size[k].end());
    std::vector<Tree> acc;
    std::vector<Tree>& out = by_size[s];
    auto rec = [&](auto&& self, int budget, std::size_t max_idx) -> void {
      if (budget == 0) {
        out.push_back(Tree::node(acc));
        return;
      }
      for (std::size_t i = 0; i < std::min(max_idx + 1, pool.size()); ++i) {
        int sz = static_cast<int>(pool[i].size());
        if (sz > budget) continue;
        acc.push_back(pool[i]);
        self(self, budget - sz, i);
        acc.pop_back();
      }
    };
    rec(rec, s - 1, pool.size());
    std::sort(out.begin(), out.end());
  }
  return by_size;
}

}  // namespace

std::vector<Tree> enumerate_trees(int n) {
  check_bound(n);
  if (n < 1) return {};
  return trees_by_size(n)[n];
}

std::vector<Component> enumerate_components(int n) {
  check_bound(n);
  if (n < 1) return {};
  std::vector<std::vector<Tree>> by_size = trees_by_size(n);
  std::set<Component> seen;
  for (int p = 1; p <= n; ++p) {
    // ordered compositions of n into p tree sizes; rotations collapse in the
    // canonical form
    std::vector<Tree> spine;
    auto rec = [&](auto&& self, int pos, int budget) -> void {
      if (pos == p) {
        if (budget == 0)
          seen.insert(Component(static_cast<std::uint32_t>(p), spine));
        return;
      }
      int remaining_slots = p - pos - 1;
      for (int sz = 1; sz + remaining_slots <= budget; ++sz) {
        for (const Tree& t : by_size[sz]) {
          spine.push_back(t);
          self(self, pos + 1, budget - sz);
          spine.pop_back();
        }
      }
    };
    rec(rec, 0, n);
  }
  return {seen.begin(), seen.end()};
}

std::vector<Fdds> enumerate_fdds(int n) {
  check_bound(n);
  if (n < 0) return {};
  if (n == 0) return {Fdds()};
  std::vector<Component> pool;
  for (int s = 1; s <= n; ++s) {
    std::vector<Component> cs = enumerate_components(s);
    pool.insert(pool.end(), cs.begin(), cs.end());
  }
  std::vector<Fdds> out;
  std::vector<Component> acc;
  auto rec = [&](auto&& self, int budget, std::size_t max_idx) -> void {
    if (budget == 0) {
      out.push_back(Fdds(acc));
      return;
    }
    for (std::size_t i = 0; i < std::min(max_idx + 1, pool.size()); ++i) {
      int sz = static_cast<int>(pool[i].node_count());
      if (sz > budget) continue;
      acc.push_back(pool[i]);
      self(self, budget - sz, i);
      acc.pop_back();
    }
  };
  rec(rec, n, pool.size());
  return out;
}

std::vector<Fdds> brute_solve(const FddsPolynomial& p, const Fdds& b,
                              int max_nodes) {
  check_bound(max_nodes);
  std::vector<Fdds> out;
  if (evaluate(p, Fdds()) == b) out.push_back(Fdds());
  for (int s = 1; s <= max_nodes; ++s)
    for (const Fdds& x : enumerate_fdds(s))
      if (evaluate(p, x) == b) out.push_back(x);
  return out;
}

std::vector<Forest> brute_forest_solve(const ForestPolynomial& p,
                                       const Forest& b, int max_depth,
                                       int max_nodes) {
  check_bound(max_nodes);
  std::vector<Tree> pool;
  {
    std::vector<std::vector<Tree>> by_size = trees_by_size(std::max(max_nodes, 1));
    for (int s = 1; s <= max_nodes; ++s)
      for (const Tree& t : by_size[s])
        if (t.depth() <= max_depth) pool.push_back(t);
  }
  std::vector<Forest> out;
  std::vector<Tree> acc;
  auto consider = [&]() {
    Forest x(acc);
    if (evaluate(p, x) == b) out.push_back(x);
  };
  auto rec = [&](auto&& self, int budget, std::size_t max_idx) -> void {
    consider();
    for (std::size_t i = 0; i < std::min(max_idx + 1, pool.size()); ++i) {
      int sz = static_cast<int>(pool[i].size());
      if (sz > budget) continue;
      acc.push_back(pool[i]);
      self(self, budget - sz, i);
      acc.pop_back();
    }
  };
  rec(rec, max_nodes, pool.size());
  return out;
}

}  // namespace fdds
