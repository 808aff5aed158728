#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fdds/errors.hpp"
#include "fdds/injectivity.hpp"
#include "fdds/oracle.hpp"
#include "support.hpp"

using namespace fdds;

TEST_CASE("delta recursion") {
  CHECK(delta({}) == 1);
  CHECK(delta({2}) == 1);
  CHECK(delta({2, 4}) == 2);
  CHECK(delta({2, 3}) == 1);
  CHECK(delta({2, 3, 4}) == 2);
  CHECK(delta({4, 6}) == 2);
}

TEST_CASE("alpha_beta") {
  auto [a0, b0] = alpha_beta({}, {2});
  CHECK(a0 == 2);
  CHECK(b0 == 4);
  auto [a1, b1] = alpha_beta({2}, {2});
  CHECK(a1 == 2);
  CHECK(b1 == 1);
  // sign alternation: odd |I| means beta < alpha
  CycleLengthSet a = {2, 3, 5};
  for (unsigned mask = 0; mask < 8; ++mask) {
    CycleLengthSet i;
    unsigned idx = 0;
    for (std::uint32_t v : a) {
      if (mask & (1u << idx)) i.insert(v);
      ++idx;
    }
    auto [al, be] = alpha_beta(i, a);
    CHECK(al != be);
    if (i.size() % 2 == 1)
      CHECK(be < al);
    else
      CHECK(be > al);
  }
  CHECK_THROWS_AS(alpha_beta({7}, {2}), MalformedInput);
}

TEST_CASE("counterexample_monomial for {2}") {
  auto [x, y] = counterexample_monomial({2}, 1);
  CHECK(x == Fdds::cycle(1, 2) + Fdds::cycle(2, 2));
  CHECK(y == Fdds::cycle(1, 4) + Fdds::cycle(2));
  Fdds c2 = Fdds::cycle(2);
  CHECK(c2 * x == Fdds::cycle(2, 6));
  CHECK(c2 * x == c2 * y);
  // same witness works for k = 2
  auto [x2, y2] = counterexample_monomial({2}, 2);
  CHECK(c2 * fdds_power(x2, 2) == c2 * fdds_power(y2, 2));
  CHECK(!(x2 == y2));
}

TEST_CASE("counterexample_monomial verifies per component") {
  std::vector<CycleLengthSet> sets = {{2}, {3}, {2, 3}, {2, 4}, {3, 4, 6}};
  for (const auto& a : sets)
    for (unsigned k = 1; k <= 3; ++k) {
      auto [x, y] = counterexample_monomial(a, k);
      CHECK(!(x == y));
      Fdds xk = fdds_power(x, k);
      Fdds yk = fdds_power(y, k);
      for (std::uint32_t b : a) {
        Fdds cb = Fdds::cycle(b);
        CHECK(cb * xk == cb * yk);
      }
    }
  CHECK_THROWS_AS(counterexample_monomial({}, 1), MalformedInput);
  CHECK_THROWS_AS(counterexample_monomial({1, 2}, 1), MalformedInput);
}

TEST_CASE("is_injective") {
  FddsPolynomial c2x;
  c2x.terms.push_back({1, Fdds::cycle(2)});
  CHECK(!is_injective(c2x));
  FddsPolynomial xk;
  xk.terms.push_back({3, Fdds::cycle(1)});
  CHECK(is_injective(xk));
  FddsPolynomial mix;
  mix.terms.push_back({0, Fdds::cycle(5)});
  mix.terms.push_back({1, Fdds::cycle(2)});
  mix.terms.push_back({3, Fdds::cycle(2) + Fdds::cycle(1)});
  CHECK(is_injective(mix));
  FddsPolynomial constant;
  constant.terms.push_back({0, Fdds::cycle(2)});
  CHECK_THROWS_AS(is_injective(constant), MalformedPolynomial);
}

TEST_CASE("counterexample") {
  FddsPolynomial c2x;
  c2x.terms.push_back({1, Fdds::cycle(2)});
  auto w = counterexample(c2x);
  REQUIRE(w.has_value());
  CHECK(w->first == Fdds::cycle(1, 2) + Fdds::cycle(2, 2));
  CHECK(w->second == Fdds::cycle(1, 4) + Fdds::cycle(2));
  CHECK(evaluate(c2x, w->first) == evaluate(c2x, w->second));

  FddsPolynomial id;
  id.terms.push_back({1, Fdds::cycle(1)});
  CHECK(!counterexample(id).has_value());

  FddsPolynomial p;
  p.terms.push_back({1, Fdds::cycle(2)});
  p.terms.push_back({2, Fdds::cycle(2)});
  auto w2 = counterexample(p);
  REQUIRE(w2.has_value());
  CHECK(!(w2->first == w2->second));
  CHECK(evaluate(p, w2->first) == evaluate(p, w2->second));

  // decorated non-cancelable coefficients go through the permutation
  // reduction; the witness is still verified by evaluation
  FddsPolynomial q;
  q.terms.push_back({1, parse_fdds("a b\nb a\nc a")});  // decorated C2
  q.terms.push_back({2, Fdds::cycle(3)});
  auto w3 = counterexample(q);
  REQUIRE(w3.has_value());
  CHECK(evaluate(q, w3->first) == evaluate(q, w3->second));

  // constant-only polynomials are constant maps
  FddsPolynomial constant;
  constant.terms.push_back({0, Fdds::cycle(2)});
  auto w4 = counterexample(constant);
  REQUIRE(w4.has_value());
  CHECK(evaluate(constant, w4->first) == evaluate(constant, w4->second));
}

TEST_CASE("characterization spot-check against the evaluation oracle") {
  // small non-injective polynomials really do collide within small bounds,
  // and injective ones never collide among X up to 5 nodes
  std::vector<Fdds> xs;
  for (int s = 0; s <= 5; ++s) {
    auto v = enumerate_fdds(s);
    xs.insert(xs.end(), v.begin(), v.end());
  }
  std::mt19937 rng(211);
  for (int it = 0; it < 40; ++it) {
    FddsPolynomial p =
        testsupport::random_fdds_poly(rng, 2, 3, false, false);
    bool inj = is_injective(p);
    bool collision = false;
    for (std::size_t i = 0; i < xs.size() && !collision; ++i)
      for (std::size_t j = i + 1; j < xs.size() && !collision; ++j)
        if (evaluate(p, xs[i]) == evaluate(p, xs[j])) collision = true;
    if (collision) CHECK(!inj);
    if (inj) CHECK(!collision);
  }
}
