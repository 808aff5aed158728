#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fdds/fdds.hpp"
#include "fdds/forest.hpp"
#include "fdds/polynomial.hpp"

namespace fdds {

enum class SolveStatus { solution, no_solution };

struct TraceEntry {
  int depth;               // working depth when the candidate was tried
  std::uint32_t exponent;  // exponent of the coefficient tried
  bool accepted;
};

/// status == solution implies the value passed a full verification
/// evaluate(P, value) == b; no_solution is returned otherwise, never a
/// wrong value.
template <class Carrier>
struct SolveOutcome {
  SolveStatus status = SolveStatus::no_solution;
  std::optional<Carrier> value;
  std::vector<TraceEntry> trace;
};

/// Scans b ascending for the first tree divisible by a1 whose quotient has a
/// k-th root; returns (that tree, the root). When a depth-bounded solution
/// exists this recovers its minimal tree.
std::optional<std::pair<Tree, Tree>> find_min_divisible(const Forest& b,
                                                        Tree a1, unsigned k);

/// Solves P(X) = b over forests of finite trees, peeling depth layers from
/// the deepest coefficient depth down. Solutions satisfy
/// depth(X) <= max coefficient depth and are unique within that bound.
/// Throws MalformedPolynomial when P has no non-constant term.
SolveOutcome<Forest> solve_forest(const ForestPolynomial& p, const Forest& b);

/// Solves P(unroll X) = unroll B: cuts everything at the default depth,
/// solves over forests, re-rolls the solution. The value is an FDDS whose
/// unroll satisfies the equation (unique as an unroll, not as an FDDS).
SolveOutcome<Fdds> solve_unroll(const FddsPolynomial& p, const Fdds& b);

/// Solves P(X) = B over FDDS by peeling one component per iteration (cycle
/// lengths first, then the forest equation over the matching unroll cuts).
/// Requires a cancelable non-constant coefficient; throws
/// NotSupportedNonInjective otherwise.
SolveOutcome<Fdds> solve_fdds(const FddsPolynomial& p, const Fdds& b);

bool verify(const ForestPolynomial& p, const Forest& x, const Forest& b);
bool verify(const FddsPolynomial& p, const Fdds& x, const Fdds& b);

}  // namespace fdds
