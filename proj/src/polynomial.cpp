#include "fdds/polynomial.hpp"

#include <algorithm>

#include "fdds/errors.hpp"

namespace fdds {

namespace {

template <class Carrier>
Polynomial<Carrier> make_impl(std::vector<typename Polynomial<Carrier>::Term> in) {
  std::erase_if(in, [](const auto& t) { return t.coefficient.empty(); });
  std::sort(in.begin(), in.end(),
            [](const auto& a, const auto& b) { return a.exponent < b.exponent; });
  for (std::size_t i = 1; i < in.size(); ++i)
    if (in[i].exponent == in[i - 1].exponent)
      throw MalformedPolynomial("duplicate exponent " +
                                std::to_string(in[i].exponent));
  Polynomial<Carrier> p;
  p.terms = std::move(in);
  return p;
}

template <class Carrier>
Carrier evaluate_impl(const Polynomial<Carrier>& p, const Carrier& x) {
  Carrier acc;
  Carrier pow;  // x^k for the last computed k >= 1
  unsigned cur = 0;
  for (const auto& term : p.terms) {
    if (term.exponent == 0) {
      acc = acc + term.coefficient;
      continue;
    }
    if (cur == 0) {
      pow = x;
      cur = 1;
    }
    while (cur < term.exponent) {
      pow = pow * x;
      ++cur;
    }
    acc = acc + term.coefficient * pow;
  }
  return acc;
}

}  // namespace

template <>
Polynomial<Fdds> Polynomial<Fdds>::make(std::vector<Term> in) {
  return make_impl<Fdds>(std::move(in));
}

template <>
Polynomial<Forest> Polynomial<Forest>::make(std::vector<Term> in) {
  return make_impl<Forest>(std::move(in));
}

Fdds evaluate(const FddsPolynomial& p, const Fdds& x) {
  return evaluate_impl(p, x);
}

Forest evaluate(const ForestPolynomial& p, const Forest& x) {
  return evaluate_impl(p, x);
}

}  // namespace fdds
