#pragma once

#include <stdexcept>
#include <string>

namespace fdds {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad input text: edge lists with out-degree != 1, unbalanced tree words,
// malformed literals or manifests.
struct MalformedInput : Error {
  using Error::Error;
};

// A polynomial without any non-constant term where one is required.
struct MalformedPolynomial : Error {
  using Error::Error;
};

// solve_fdds declines polynomials with no cancelable non-constant
// coefficient: completeness is only established for the injective class and
// several solutions may exist.
struct NotSupportedNonInjective : Error {
  using Error::Error;
};

// Internal verification of a counterexample construction failed.
struct ConstructionFailed : Error {
  using Error::Error;
};

// Enumeration or multiplicity bounds exceeded.
struct LimitExceeded : Error {
  using Error::Error;
};

}  // namespace fdds
