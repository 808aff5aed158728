#include "fdds/injectivity.hpp"

#include <iostream>
#include <vector>

#include "fdds/errors.hpp"

namespace fdds {

mpz_class delta(const CycleLengthSet& j) {
  mpz_class d = 1, lcm = 1;
  for (std::uint32_t a : j) {  // std::set iterates ascending
    mpz_class g;
    mpz_gcd_ui(g.get_mpz_t(), lcm.get_mpz_t(), a);
    d *= g;
    mpz_lcm_ui(lcm.get_mpz_t(), lcm.get_mpz_t(), a);
  }
  return d;
}

std::pair<mpz_class, mpz_class> alpha_beta(const CycleLengthSet& i,
                                           const CycleLengthSet& a) {
  for (std::uint32_t v : i)
    if (!a.count(v)) throw MalformedInput("alpha_beta requires I subset of A");
  mpz_class prod_a = 1;
  for (std::uint32_t v : a) prod_a *= v;
  mpz_class prod_rest = 1;
  for (std::uint32_t v : a)
    if (!i.count(v)) prod_rest *= v;
  mpz_class alpha = delta(a) * prod_a;
  mpz_class term = delta(i) * prod_rest;
  mpz_class beta = (i.size() % 2 == 0) ? mpz_class(alpha + term) : mpz_class(alpha - term);
  return {alpha, beta};
}

namespace {

std::uint64_t to_count(const mpz_class& v, const char* what) {
  if (v < 0) throw ConstructionFailed(std::string(what) + " is negative");
  if (!v.fits_ulong_p())
    throw LimitExceeded(std::string(what) + " exceeds representable counts");
  return v.get_ui();
}

std::uint32_t lcm_of(const std::vector<std::uint32_t>& vals) {
  mpz_class l = 1;
  for (std::uint32_t v : vals) mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), v);
  if (!l.fits_ulong_p() || l.get_ui() > 0xffffffffull)
    throw LimitExceeded("cycle length lcm too large");
  return static_cast<std::uint32_t>(l.get_ui());
}

// Builds X = sum over I of alpha_I C_lcm(I), Y likewise with beta_I.
// The variant flag switches to the fallback reading of the alpha formula.
std::pair<Fdds, Fdds> build_pair(const std::vector<std::uint32_t>& a,
                                 bool variant) {
  CycleLengthSet full(a.begin(), a.end());
  mpz_class prod_a = 1;
  for (std::uint32_t v : a) prod_a *= v;
  mpz_class delta_a = delta(full);
  Fdds x, y;
  for (std::uint32_t mask = 0; mask < (1u << a.size()); ++mask) {
    CycleLengthSet i;
    std::vector<std::uint32_t> members;
    mpz_class prod_rest = 1;
    for (std::size_t bit = 0; bit < a.size(); ++bit) {
      if (mask & (1u << bit)) {
        i.insert(a[bit]);
        members.push_back(a[bit]);
      } else {
        prod_rest *= a[bit];
      }
    }
    mpz_class term = delta(i) * prod_rest;
    mpz_class alpha = delta_a * prod_a;
    if (variant) alpha += term;
    mpz_class beta = (i.size() % 2 == 0) ? mpz_class(alpha + term) : mpz_class(alpha - term);
    std::uint32_t cyc = lcm_of(members);
    x.add(Component::cycle(cyc), to_count(alpha, "alpha"));
    y.add(Component::cycle(cyc), to_count(beta, "beta"));
  }
  return {x, y};
}

bool monomial_identity_holds(const std::vector<std::uint32_t>& a,
                             const Fdds& x, const Fdds& y, unsigned k) {
  Fdds xk = fdds_power(x, k);
  Fdds yk = fdds_power(y, k);
  for (std::uint32_t b : a) {
    Fdds cb = Fdds::cycle(b);
    if (!(cb * xk == cb * yk)) return false;
  }
  return true;
}

}  // namespace

std::pair<Fdds, Fdds> counterexample_monomial(const CycleLengthSet& a,
                                              unsigned k) {
  if (a.empty()) throw MalformedInput("cycle length set must be non-empty");
  if (k == 0) throw MalformedInput("monomial exponent must be positive");
  for (std::uint32_t v : a)
    if (v < 2) throw MalformedInput("cycle lengths must all be >= 2");
  if (a.size() > 20) throw LimitExceeded("cycle length set too large");
  std::vector<std::uint32_t> vals(a.begin(), a.end());
  auto [x, y] = build_pair(vals, false);
  if (!(x == y) && monomial_identity_holds(vals, x, y, k)) return {x, y};
  std::cerr << "fdds: counterexample formula fallback engaged\n";
  auto [x2, y2] = build_pair(vals, true);
  if (!(x2 == y2) && monomial_identity_holds(vals, x2, y2, k))
    return {x2, y2};
  throw ConstructionFailed("counterexample construction failed verification");
}

bool is_injective(const FddsPolynomial& p) {
  if (!p.has_nonconstant())
    throw MalformedPolynomial("injectivity needs a non-constant term");
  for (const auto& t : p.terms)
    if (t.exponent > 0 && is_cancelable(t.coefficient)) return true;
  return false;
}

std::optional<std::pair<Fdds, Fdds>> counterexample(const FddsPolynomial& p) {
  if (!p.has_nonconstant()) {
    // constant map: any two values collide
    Fdds x, y = Fdds::cycle(1);
    return std::make_pair(x, y);
  }
  if (is_injective(p)) return std::nullopt;
  CycleLengthSet a;
  for (const auto& t : p.terms)
    if (t.exponent > 0)
      for (const auto& [c, cnt] : t.coefficient.components())
        a.insert(c.cycle_len());
  auto [x, y] = counterexample_monomial(a, 1);
  if (!(evaluate(p, x) == evaluate(p, y)))
    throw ConstructionFailed("witness failed full polynomial verification");
  return std::make_pair(x, y);
}

}  // namespace fdds
