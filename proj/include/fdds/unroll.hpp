#pragma once

#include <optional>

#include "fdds/fdds.hpp"
#include "fdds/forest.hpp"
#include "fdds/polynomial.hpp"

namespace fdds {

/// Depth-n cut of the unroll: one preimage tree per periodic state, each
/// truncated at depth n. Unrolls are never materialized as infinite objects;
/// every consumer passes an explicit cut depth.
Forest unroll_cut(const Fdds& x, int n);
Forest unroll_cut(const Component& c, int n);

/// Cut unroll tree rooted at the cyclic state `rotation` (index into the
/// canonical spine order).
Tree unroll_tree_cut(const Component& c, unsigned rotation, int n);

/// The minimal tree among the component's cut unroll trees at depth n
/// (default depth(c) + cycle length, deep enough to separate rotations).
Tree min_unroll_tree_cut(const Component& c, std::optional<int> n = {});

/// 2*alpha^2 + depth(unroll of b), alpha = number of periodic states of b.
/// Cutting at this depth is enough to decide P(unroll X) = unroll B.
int default_cut_depth(const FddsPolynomial& p, const Fdds& b);

/// Rebuilds a component of cycle length p from a depth-n cut of one of its
/// unroll trees, given a bound d on the transient depth; requires
/// n >= d + 2p. Returns nullopt when the spine decoration sequence is not
/// p-periodic in the read window (no such component exists). The result is
/// verified by a cut-of-unroll roundtrip before returning.
std::optional<Component> reroll(Tree t, std::uint32_t p, int transient_bound);

}  // namespace fdds
