#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "fdds/errors.hpp"
#include "fdds/oracle.hpp"

using namespace fdds;

TEST_CASE("tree enumeration counts") {
  // rooted unordered trees per node count
  const int expected[] = {1, 1, 2, 4, 9, 20, 48, 115, 286, 719};
  for (int n = 1; n <= 10; ++n)
    CHECK(enumerate_trees(n).size() == static_cast<std::size_t>(expected[n - 1]));
  CHECK(enumerate_trees(1)[0] == Tree::leaf());
  auto three = enumerate_trees(3);
  REQUIRE(three.size() == 2);
  CHECK(std::find(three.begin(), three.end(), Tree::path(2)) != three.end());
  CHECK(std::find(three.begin(), three.end(),
                  Tree::node({Tree::leaf(), Tree::leaf()})) != three.end());
  CHECK_THROWS_AS(enumerate_trees(11), LimitExceeded);
}

TEST_CASE("enumeration is duplicate-free and sorted") {
  for (int n = 1; n <= 8; ++n) {
    auto v = enumerate_trees(n);
    for (std::size_t i = 1; i < v.size(); ++i) CHECK(v[i - 1] < v[i]);
    for (const Tree& t : v) CHECK(t.size() == n);
  }
}

TEST_CASE("connected FDDS counts") {
  const int expected[] = {1, 2, 4, 9, 20, 51, 125, 329, 862, 2311};
  for (int n = 1; n <= 8; ++n)
    CHECK(enumerate_components(n).size() ==
          static_cast<std::size_t>(expected[n - 1]));
}

TEST_CASE("FDDS enumeration counts match the mapping-class sequence") {
  const int expected[] = {1, 3, 7, 19, 47, 130, 343, 951};
  for (int n = 1; n <= 8; ++n)
    CHECK(enumerate_fdds(n).size() == static_cast<std::size_t>(expected[n - 1]));
  // enumerate_fdds(2): two fixed points, C2, and the 2-node dendron
  auto two = enumerate_fdds(2);
  REQUIRE(two.size() == 3);
  CHECK(std::find(two.begin(), two.end(), Fdds::cycle(1, 2)) != two.end());
  CHECK(std::find(two.begin(), two.end(), Fdds::cycle(2)) != two.end());
  CHECK(std::find(two.begin(), two.end(), parse_fdds("a a\nb a")) != two.end());
  for (const Fdds& x : enumerate_fdds(6)) CHECK(x.node_count() == 6);
}

TEST_CASE("brute_solve") {
  FddsPolynomial c2x;
  c2x.terms.push_back({1, Fdds::cycle(2)});
  // every a C1 + b C2 with a + 2b = 6 solves C2 X = 6 C2: four of them
  auto sols = brute_solve(c2x, Fdds::cycle(2, 6), 7);
  REQUIRE(sols.size() == 4);
  for (const Fdds& s :
       {Fdds::cycle(1, 2) + Fdds::cycle(2, 2), Fdds::cycle(1, 4) + Fdds::cycle(2),
        Fdds::cycle(2, 3), Fdds::cycle(1, 6)})
    CHECK(std::find(sols.begin(), sols.end(), s) != sols.end());

  FddsPolynomial id;
  id.terms.push_back({1, Fdds::cycle(1)});
  Fdds b = parse_fdds("a b\nb a\nc c");
  auto sols2 = brute_solve(id, b, static_cast<int>(b.node_count()));
  REQUIRE(sols2.size() == 1);
  CHECK(sols2[0] == b);

  // bound semantics: C3 is excluded by max_nodes = 2
  CHECK(brute_solve(id, Fdds::cycle(3), 2).empty());
}

TEST_CASE("brute_forest_solve") {
  ForestPolynomial p;
  p.terms.push_back({2, Forest::single(Tree::path(1))});
  Forest b = Forest::single(Tree::node({Tree::leaf(), Tree::leaf(),
                                        Tree::leaf(), Tree::leaf()}),
                            4);
  auto sols = brute_forest_solve(p, b, 1, 6);
  REQUIRE(sols.size() == 1);
  CHECK(sols[0] ==
        Forest::single(Tree::node({Tree::leaf(), Tree::leaf()}), 2));
  // empty solution shows up when b is empty
  ForestPolynomial q;
  q.terms.push_back({1, Forest::single(Tree::leaf())});
  auto sols2 = brute_forest_solve(q, Forest(), 2, 4);
  REQUIRE(sols2.size() == 1);
  CHECK(sols2[0].empty());
}
