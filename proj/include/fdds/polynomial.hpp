#pragma once

#include <cstdint>
#include <vector>

#include "fdds/fdds.hpp"
#include "fdds/forest.hpp"

namespace fdds {

/// Sparse univariate polynomial over a semiring carrier (Fdds or Forest):
/// strictly increasing exponents, no zero (empty) coefficients stored.
template <class Carrier>
struct Polynomial {
  struct Term {
    std::uint32_t exponent;
    Carrier coefficient;
  };

  std::vector<Term> terms;

  /// Sorts by exponent, drops empty coefficients, rejects duplicates.
  static Polynomial make(std::vector<Term> in);

  const Carrier* constant() const {
    return (!terms.empty() && terms.front().exponent == 0)
               ? &terms.front().coefficient
               : nullptr;
  }
  bool has_nonconstant() const {
    return !terms.empty() && terms.back().exponent > 0;
  }
};

using ForestPolynomial = Polynomial<Forest>;
using FddsPolynomial = Polynomial<Fdds>;

/// A0 + sum of A_i x^{k_i}; over FDDS the 0-th power is C1, so the constant
/// term contributes itself.
Fdds evaluate(const FddsPolynomial& p, const Fdds& x);
Forest evaluate(const ForestPolynomial& p, const Forest& x);

}  // namespace fdds
