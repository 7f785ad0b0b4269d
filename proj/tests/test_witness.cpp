#include <doctest.h>

#include "helpers.hpp"
#include "semitree/sampler.hpp"
#include "semitree/witness.hpp"

using namespace semitree;
using semitree::test::mk;

TEST_CASE("between lands strictly between comparable points") {
  CHECK(between(mk({}, "2"), mk({}, "0")) == mk({}, "1"));

  Sampler sampler(21);
  for (int it = 0; it < 100; ++it) {
    auto [lo, hi] = sampler.random_comparable_pair();
    Node m = between(lo, hi);
    CHECK(lt(lo, m));
    CHECK(lt(m, hi));
  }
  CHECK_THROWS_AS(between(mk({}, "0"), mk({}, "2")), std::invalid_argument);
  CHECK_THROWS_AS(between(mk({}, "1"), mk({"1/2"}, "1")), std::invalid_argument);
}

TEST_CASE("above and below step off the point") {
  Sampler sampler(22);
  for (int it = 0; it < 100; ++it) {
    Node a = sampler.random_node();
    Node up = above(a);
    Node down = below(a);
    CHECK(lt(a, up));
    CHECK(lt(down, a));
    CHECK_NOTHROW(validate_node(up));
    CHECK_NOTHROW(validate_node(down));
  }
}

TEST_CASE("branch_off splits inside the requested window") {
  CHECK(branch_off(mk({}, "3"), Rat(0), Rat(3)) == mk({"1/2"}, "1"));

  Sampler sampler(23);
  for (int it = 0; it < 100; ++it) {
    Node a = sampler.random_node();
    Rat hi = a.depth;
    Rat lo = hi - 2;
    Node b = branch_off(a, lo, hi);
    CHECK(perp(a, b));
    REQUIRE(divergence(a, b).has_value());
    CHECK(*divergence(a, b) > lo);
    CHECK(*divergence(a, b) < hi);
  }
}

TEST_CASE("branch_off respects the exclusion set") {
  Node a = mk({}, "3");
  Node b = branch_off(a, Rat(0), Rat(3), {Rat(1, 2)});
  CHECK(perp(a, b));
  CHECK(*divergence(a, b) != Rat(1, 2));
}

TEST_CASE("interpolant: single upper point, side witness pins the divergence") {
  // One point below, one above, one to the side branching at 5/2.
  Node u = mk({}, "3");
  Node v = mk({}, "0");
  Node w = mk({"5/2"}, "3");
  Node x = interpolant({u}, {v}, {w});
  CHECK(x == mk({}, "8/3"));
  CHECK(lt(u, x));
  CHECK(lt(x, v));
  CHECK(perp(x, w));
  CHECK(*divergence(x, w) == *divergence(u, w));
}

TEST_CASE("interpolant: two-point antichain below") {
  Node u1 = mk({"1/2"}, "2");
  Node u2 = mk({}, "2");
  Node v = mk({}, "0");
  Node x = interpolant({u1, u2}, {v}, {});
  CHECK(x == mk({}, "1/3"));
  CHECK(lt(u1, x));
  CHECK(lt(u2, x));
  CHECK(lt(x, v));
}

TEST_CASE("interpolant with empty V and W sits just above") {
  Node u = mk({}, "3");
  Node x = interpolant({u}, {}, {});
  CHECK(lt(u, x));
}

TEST_CASE("interpolant validates its preconditions") {
  CHECK_THROWS_AS(interpolant({}, {}, {}), std::invalid_argument);
  // upper point not above the lower set
  CHECK_THROWS_AS(interpolant({mk({}, "1")}, {mk({"1/2"}, "1")}, {}),
                  std::invalid_argument);
  // side witness comparable to the lower set
  CHECK_THROWS_AS(interpolant({mk({}, "3")}, {mk({}, "0")}, {mk({}, "2")}),
                  std::invalid_argument);
}

TEST_CASE("interpolant postcondition holds for sampled side families") {
  Sampler sampler(24);
  for (int it = 0; it < 60; ++it) {
    Node u = sampler.random_node();
    Node v = above(above(u));
    // Side points must branch off u above v, otherwise they end up
    // comparable to v instead of incomparable to the whole window.
    std::vector<Node> side = {branch_off(u, v.depth - 1, v.depth),
                              branch_off(u, v.depth - 2, v.depth - 1)};
    Node x = interpolant({u}, {v}, side);
    CHECK(lt(u, x));
    CHECK(lt(x, v));
    for (const Node& s : side) {
      CHECK(perp(x, s));
      CHECK(*divergence(x, s) == *divergence(u, s));
    }
  }
}
