#pragma once

// Shared random generators for the test suites. Everything is seeded
// deterministically by the individual tests.

#include <random>
#include <vector>

#include "fdds/fdds.hpp"
#include "fdds/forest.hpp"
#include "fdds/polynomial.hpp"
#include "fdds/tree.hpp"

namespace testsupport {

using namespace fdds;

// random functional graph on n vertices, canonical by construction
inline Fdds random_fdds(std::mt19937& rng, int n) {
  if (n <= 0) return Fdds();
  std::vector<int> f(n);
  for (int i = 0; i < n; ++i) f[i] = static_cast<int>(rng() % n);
  return detail::decompose(f);
}

// random rooted tree on n nodes (random parent attachment)
inline Tree random_tree(std::mt19937& rng, int n) {
  if (n <= 1) return Tree::leaf();
  std::vector<std::vector<int>> pre(n);
  for (int v = 1; v < n; ++v) pre[rng() % v].push_back(v);
  // build bottom-up
  std::vector<Tree> built(n, Tree::leaf());
  for (int v = n - 1; v >= 0; --v) {
    std::vector<Tree> kids;
    for (int c : pre[v]) kids.push_back(built[c]);
    built[v] = Tree::node(kids);
  }
  return built[0];
}

inline Forest random_forest(std::mt19937& rng, int max_trees, int max_nodes,
                            int max_depth) {
  Forest f;
  int n = 1 + static_cast<int>(rng() % max_trees);
  for (int i = 0; i < n; ++i) {
    Tree t = random_tree(rng, 1 + static_cast<int>(rng() % max_nodes));
    f.add(cut(t, static_cast<int>(rng() % (max_depth + 1))));
  }
  return f;
}

// random polynomial over FDDS with small coefficients; if force_cancelable,
// one non-constant coefficient gets a fixed point added
inline FddsPolynomial random_fdds_poly(std::mt19937& rng, int max_degree,
                                       int max_coeff_nodes,
                                       bool force_cancelable,
                                       bool allow_constant = true) {
  FddsPolynomial p;
  unsigned degree = 1 + rng() % max_degree;
  for (unsigned k = allow_constant ? 0 : 1; k <= degree; ++k) {
    if (k != degree && rng() % 2 == 0) continue;  // sparse
    Fdds c = random_fdds(rng, 1 + static_cast<int>(rng() % max_coeff_nodes));
    if (!c.empty()) p.terms.push_back({k, c});
  }
  if (p.terms.empty() || !p.has_nonconstant())
    p.terms.push_back({degree, Fdds::cycle(1)});
  if (force_cancelable) {
    bool ok = false;
    for (const auto& t : p.terms)
      if (t.exponent > 0 && is_cancelable(t.coefficient)) ok = true;
    if (!ok) {
      for (auto& t : p.terms)
        if (t.exponent > 0) {
          t.coefficient.add(Component::cycle(1));
          break;
        }
    }
  }
  return p;
}

inline ForestPolynomial random_forest_poly(std::mt19937& rng, int max_degree,
                                           int max_coeff_trees,
                                           int max_coeff_nodes, int max_depth,
                                           bool allow_constant = true) {
  ForestPolynomial p;
  unsigned degree = 1 + rng() % max_degree;
  for (unsigned k = allow_constant ? 0 : 1; k <= degree; ++k) {
    if (k != degree && rng() % 2 == 0) continue;
    Forest c = random_forest(rng, max_coeff_trees, max_coeff_nodes, max_depth);
    if (!c.empty()) p.terms.push_back({k, c});
  }
  if (p.terms.empty() || !p.has_nonconstant())
    p.terms.push_back(
        {degree, random_forest(rng, max_coeff_trees, max_coeff_nodes, max_depth)});
  return p;
}

}  // namespace testsupport
