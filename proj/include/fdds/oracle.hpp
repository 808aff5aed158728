#pragma once

#include <vector>

#include "fdds/fdds.hpp"
#include "fdds/forest.hpp"
#include "fdds/polynomial.hpp"
#include "fdds/tree.hpp"

namespace fdds {

// Brute-force reference enumerators and solvers anchoring the property
// tests. All enumeration is by canonical-form generation, one representative
// per isomorphism class, deterministic output order. Bounds are guarded
// (LimitExceeded beyond 10 nodes).

/// Rooted unordered trees with exactly n nodes, ascending by the tree order.
std::vector<Tree> enumerate_trees(int n);

/// Connected FDDS with exactly n nodes.
std::vector<Component> enumerate_components(int n);

/// FDDS with exactly n nodes (the empty FDDS is the n = 0 case).
std::vector<Fdds> enumerate_fdds(int n);

/// All X with at most max_nodes nodes (including the empty FDDS) such that
/// P(X) = b, by exhaustive evaluation.
std::vector<Fdds> brute_solve(const FddsPolynomial& p, const Fdds& b,
                              int max_nodes);

/// All forests of depth <= max_depth with at most max_nodes total nodes
/// (including the empty forest) such that P(X) = b.
std::vector<Forest> brute_forest_solve(const ForestPolynomial& p,
                                       const Forest& b, int max_depth,
                                       int max_nodes);

}  // namespace fdds
