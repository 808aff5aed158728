#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <set>
#include <utility>

#include "fdds/fdds.hpp"
#include "fdds/polynomial.hpp"

namespace fdds {

/// Set of cycle lengths used by the counterexample construction.
using CycleLengthSet = std::set<std::uint32_t>;

/// delta(empty) = 1, delta(J + {a}) = gcd(a, lcm(J)) * delta(J), members
/// inserted in ascending order (the recursion is order-sensitive as written;
/// the ascending order is fixed here and verified end to end).
mpz_class delta(const CycleLengthSet& j);

/// alpha = delta(A) * prod(A);
/// beta  = alpha + (-1)^|I| * delta(I) * prod(A - I). Requires I subset of A.
std::pair<mpz_class, mpz_class> alpha_beta(const CycleLengthSet& i,
                                           const CycleLengthSet& a);

/// Two distinct permutation FDDS X != Y with C_b X^k = C_b Y^k for every
/// b in A (members >= 2, k >= 1), verified by direct product evaluation
/// before returning. Throws ConstructionFailed if verification fails even
/// after the fallback reading of the alpha formula.
std::pair<Fdds, Fdds> counterexample_monomial(const CycleLengthSet& a,
                                              unsigned k);

/// True iff some non-constant coefficient is cancelable; the constant term
/// is irrelevant. Throws MalformedPolynomial when P has only a constant.
bool is_injective(const FddsPolynomial& p);

/// Witness X != Y with P(X) = P(Y), verified before returning; absent iff
/// P is injective. A constant-only polynomial maps everything to its
/// constant, so any pair witnesses it.
std::optional<std::pair<Fdds, Fdds>> counterexample(const FddsPolynomial& p);

}  // namespace fdds
