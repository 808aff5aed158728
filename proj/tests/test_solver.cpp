#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "fdds/errors.hpp"
#include "fdds/oracle.hpp"
#include "fdds/solver.hpp"
#include "fdds/unroll.hpp"
#include "support.hpp"

using namespace fdds;
using testsupport::random_fdds;
using testsupport::random_fdds_poly;
using testsupport::random_forest;
using testsupport::random_forest_poly;

namespace {

Tree leaves(int n) {
  return Tree::node(std::vector<Tree>(n, Tree::leaf()));
}

}  // namespace

TEST_CASE("find_min_divisible examples") {
  Forest b1 = Forest::single(leaves(2));
  auto r1 = find_min_divisible(b1, Tree::path(1), 1);
  REQUIRE(r1.has_value());
  CHECK(r1->first == leaves(2));
  CHECK(r1->second == leaves(2));

  Forest b2 = Forest::single(leaves(4));
  auto r2 = find_min_divisible(b2, Tree::path(1), 2);
  REQUIRE(r2.has_value());
  CHECK(r2->first == leaves(4));
  CHECK(r2->second == leaves(2));

  Forest b3 = Forest::single(leaves(3));
  CHECK(!find_min_divisible(b3, Tree::path(1), 2).has_value());
}

TEST_CASE("solve_forest examples") {
  // a X = b with a = {path1}
  ForestPolynomial p1;
  p1.terms.push_back({1, Forest::single(Tree::path(1))});
  auto o1 = solve_forest(p1, Forest::single(leaves(2)));
  REQUIRE(o1.status == SolveStatus::solution);
  CHECK(*o1.value == Forest::single(leaves(2)));

  // X^2 = 4 copies of the 4-leaf star: X = two 2-leaf stars
  ForestPolynomial p2;
  p2.terms.push_back({2, Forest::single(Tree::path(1))});
  auto o2 = solve_forest(p2, Forest::single(leaves(4), 4));
  REQUIRE(o2.status == SolveStatus::solution);
  CHECK(*o2.value == Forest::single(leaves(2), 2));

  // the path coefficient is an identity: X = b solves it, oracle agrees
  Forest b3;
  b3.add(leaves(3));
  b3.add(leaves(2));
  auto oracle3 = brute_forest_solve(p1, b3, 1, 7);
  REQUIRE(oracle3.size() == 1);
  CHECK(oracle3[0] == b3);
  auto o3 = solve_forest(p1, b3);
  REQUIRE(o3.status == SolveStatus::solution);
  CHECK(*o3.value == b3);

  // a genuinely unsolvable instance: {2-leaf star} X = {3-leaf star}
  ForestPolynomial p4;
  p4.terms.push_back({1, Forest::single(leaves(2))});
  Forest b4 = Forest::single(leaves(3));
  CHECK(brute_forest_solve(p4, b4, 1, 4).empty());
  CHECK(solve_forest(p4, b4).status == SolveStatus::no_solution);

  CHECK_THROWS_AS(solve_forest(ForestPolynomial{}, Forest()),
                  MalformedPolynomial);
}

TEST_CASE("solve_forest degenerate inputs") {
  ForestPolynomial p;
  p.terms.push_back({0, Forest::single(Tree::path(1))});
  p.terms.push_back({1, Forest::single(Tree::path(1))});
  // b empty with a constant: no solution
  CHECK(solve_forest(p, Forest()).status == SolveStatus::no_solution);
  // b equal to the constant: X = empty
  auto o = solve_forest(p, Forest::single(Tree::path(1)));
  REQUIRE(o.status == SolveStatus::solution);
  CHECK(o.value->empty());
  ForestPolynomial q;
  q.terms.push_back({1, Forest::single(Tree::path(1))});
  auto o2 = solve_forest(q, Forest());
  REQUIRE(o2.status == SolveStatus::solution);
  CHECK(o2.value->empty());
}

TEST_CASE("solve_forest roundtrip on random instances") {
  std::mt19937 rng(101);
  int solved = 0;
  for (int it = 0; it < 300; ++it) {
    ForestPolynomial p = random_forest_poly(rng, 3, 2, 4, 2);
    int d_max = 0;
    for (const auto& t : p.terms)
      if (t.exponent > 0) d_max = std::max(d_max, t.coefficient.depth());
    Forest x;
    int trees = static_cast<int>(rng() % 3);
    for (int i = 0; i < trees; ++i) {
      Tree t = testsupport::random_tree(rng, 1 + static_cast<int>(rng() % 5));
      x.add(cut(t, static_cast<int>(rng() % (d_max + 1))));
    }
    Forest b = evaluate(p, x);
    auto out = solve_forest(p, b);
    REQUIRE(out.status == SolveStatus::solution);
    CHECK(*out.value == x);
    ++solved;
  }
  CHECK(solved == 300);
}

TEST_CASE("solve_forest agrees with the oracle on unsolvable instances") {
  std::mt19937 rng(103);
  int checked = 0;
  while (checked < 60) {
    ForestPolynomial p = random_forest_poly(rng, 2, 2, 3, 1);
    Forest b = random_forest(rng, 3, 3, 1);
    int d_max = 0;
    for (const auto& t : p.terms)
      if (t.exponent > 0) d_max = std::max(d_max, t.coefficient.depth());
    if (b.node_count() > 8) continue;
    bool oracle_solvable =
        !brute_forest_solve(p, b, d_max, static_cast<int>(b.node_count()))
             .empty();
    auto out = solve_forest(p, b);
    if (oracle_solvable)
      CHECK(out.status == SolveStatus::solution);
    else
      CHECK(out.status == SolveStatus::no_solution);
    if (out.status == SolveStatus::solution) CHECK(verify(p, *out.value, b));
    ++checked;
  }
}

TEST_CASE("solve_unroll examples") {
  // C1 X = b accepts b itself
  FddsPolynomial p1;
  p1.terms.push_back({1, Fdds::cycle(1)});
  std::mt19937 rng(107);
  for (int it = 0; it < 20; ++it) {
    Fdds b = random_fdds(rng, 1 + static_cast<int>(rng() % 6));
    auto out = solve_unroll(p1, b);
    REQUIRE(out.status == SolveStatus::solution);
    int n = default_cut_depth(p1, b);
    CHECK(unroll_cut(*out.value, n) == unroll_cut(b, n));
  }
  // X^2 = 2 C2 has X = C2 up to unroll
  FddsPolynomial p2;
  p2.terms.push_back({2, Fdds::cycle(1)});
  Fdds b2 = Fdds::cycle(2, 2);
  auto o2 = solve_unroll(p2, b2);
  REQUIRE(o2.status == SolveStatus::solution);
  int n2 = default_cut_depth(p2, b2);
  CHECK(unroll_cut(fdds_power(*o2.value, 2), n2) == unroll_cut(b2, n2));
  // C2 X = C3 is unsolvable
  FddsPolynomial p3;
  p3.terms.push_back({1, Fdds::cycle(2)});
  CHECK(solve_unroll(p3, Fdds::cycle(3)).status == SolveStatus::no_solution);
}

TEST_CASE("solve_unroll roundtrip and cut-depth stability") {
  std::mt19937 rng(109);
  for (int it = 0; it < 40; ++it) {
    FddsPolynomial p = random_fdds_poly(rng, 2, 4, false);
    Fdds x = random_fdds(rng, 1 + static_cast<int>(rng() % 5));
    Fdds b = evaluate(p, x);
    if (b.periodic_count() > 30) continue;
    auto out = solve_unroll(p, b);
    REQUIRE(out.status == SolveStatus::solution);
    int n = default_cut_depth(p, b);
    CHECK(unroll_cut(evaluate(p, *out.value), n) == unroll_cut(b, n));
  }
}

TEST_CASE("solve_fdds examples") {
  // C1 X + C1 X^2 = 3 C2 gives X = C2
  FddsPolynomial p1;
  p1.terms.push_back({1, Fdds::cycle(1)});
  p1.terms.push_back({2, Fdds::cycle(1)});
  auto o1 = solve_fdds(p1, Fdds::cycle(2, 3));
  REQUIRE(o1.status == SolveStatus::solution);
  CHECK(*o1.value == Fdds::cycle(2));

  // identity polynomial returns b
  FddsPolynomial p2;
  p2.terms.push_back({1, Fdds::cycle(1)});
  std::mt19937 rng(113);
  for (int it = 0; it < 20; ++it) {
    Fdds b = random_fdds(rng, 1 + static_cast<int>(rng() % 8));
    auto out = solve_fdds(p2, b);
    REQUIRE(out.status == SolveStatus::solution);
    CHECK(*out.value == b);
  }

  // C2 X = 6 C2 declines: several solutions exist (every a C1 + b C2 with
  // a + 2b = 6), so the solver refuses rather than picking one
  FddsPolynomial p3;
  p3.terms.push_back({1, Fdds::cycle(2)});
  CHECK_THROWS_AS(solve_fdds(p3, Fdds::cycle(2, 6)),
                  NotSupportedNonInjective);
  auto sols = brute_solve(p3, Fdds::cycle(2, 6), 6);
  CHECK(sols.size() == 4);
  for (const Fdds& s :
       {Fdds::cycle(1, 2) + Fdds::cycle(2, 2), Fdds::cycle(1, 4) + Fdds::cycle(2),
        Fdds::cycle(2, 3), Fdds::cycle(1, 6)})
    CHECK(std::find(sols.begin(), sols.end(), s) != sols.end());
}

TEST_CASE("solve_fdds roundtrip on random injective instances") {
  std::mt19937 rng(127);
  int done = 0;
  while (done < 150) {
    FddsPolynomial p = random_fdds_poly(rng, 3, 4, true);
    Fdds x = random_fdds(rng, 1 + static_cast<int>(rng() % 8));
    Fdds b = evaluate(p, x);
    if (b.periodic_count() > 40) continue;  // keep cut depths small
    auto out = solve_fdds(p, b);
    REQUIRE(out.status == SolveStatus::solution);
    CHECK(*out.value == x);
    ++done;
  }
}

TEST_CASE("solve_fdds never returns a wrong value on unsolvable inputs") {
  std::mt19937 rng(131);
  int done = 0;
  while (done < 60) {
    FddsPolynomial p = random_fdds_poly(rng, 2, 3, true);
    Fdds b = random_fdds(rng, 1 + static_cast<int>(rng() % 6));
    if (!brute_solve(p, b, static_cast<int>(b.node_count())).empty())
      continue;  // solvable: covered by the roundtrip case
    auto out = solve_fdds(p, b);
    CHECK(out.status == SolveStatus::no_solution);
    ++done;
  }
}

TEST_CASE("verify") {
  FddsPolynomial p;
  p.terms.push_back({1, Fdds::cycle(2)});
  CHECK(verify(p, Fdds::cycle(2), Fdds::cycle(2, 2)));
  FddsPolynomial idp;
  idp.terms.push_back({1, Fdds::cycle(1)});
  Fdds b = parse_fdds("a b\nb a\nc c");
  CHECK(verify(idp, b, b));
  FddsPolynomial c1x;
  c1x.terms.push_back({1, Fdds::cycle(1)});
  CHECK(!verify(c1x, Fdds::cycle(2), Fdds::cycle(3)));
}

TEST_CASE("trace stays within the structural bound") {
  std::mt19937 rng(137);
  for (int it = 0; it < 50; ++it) {
    ForestPolynomial p = random_forest_poly(rng, 3, 2, 4, 2);
    Forest x = random_forest(rng, 2, 4, 2);
    Forest b = evaluate(p, x);
    auto out = solve_forest(p, b);
    std::size_t m = p.terms.size();
    std::size_t depths = 0;
    {
      std::vector<int> ds;
      for (const auto& [t, c] : b.items()) ds.push_back(t.depth());
      std::sort(ds.begin(), ds.end());
      ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
      depths = ds.size() + 1;
    }
    CHECK(out.trace.size() <= m * depths * (1 + b.tree_count()));
  }
}
