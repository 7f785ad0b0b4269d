#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "semitree/sampler.hpp"

using namespace semitree;

TEST_CASE("same seed, same stream") {
  Sampler a(7), b(7);
  for (int i = 0; i < 50; ++i) {
    CHECK(a.random_node() == b.random_node());
  }
  Sampler c(8);
  bool all_equal = true;
  Sampler a2(7);
  for (int i = 0; i < 50; ++i) {
    if (!(a2.random_node() == c.random_node())) all_equal = false;
  }
  CHECK_FALSE(all_equal);
}

TEST_CASE("random rationals respect the parity class") {
  Sampler s(11);
  for (int i = 0; i < 200; ++i) {
    CHECK(has_parity(s.random_rational(Parity::Odd), Parity::Odd));
    CHECK(has_parity(s.random_rational(Parity::Even), Parity::Even));
  }
}

TEST_CASE("random nodes validate") {
  Sampler s(12);
  for (int i = 0; i < 300; ++i) {
    CHECK_NOTHROW(validate_node(s.random_node()));
  }
}

TEST_CASE("node sets are distinct and valid") {
  Sampler s(13);
  for (int it = 0; it < 60; ++it) {
    std::vector<Node> pts = s.random_node_set(2 + it % 6);
    for (size_t i = 0; i < pts.size(); ++i) {
      CHECK_NOTHROW(validate_node(pts[i]));
      for (size_t j = i + 1; j < pts.size(); ++j) CHECK_FALSE(pts[i] == pts[j]);
    }
  }
}

TEST_CASE("antichains are pairwise incomparable") {
  Sampler s(14);
  for (int it = 0; it < 60; ++it) {
    std::vector<Node> anti = s.random_antichain(2 + it % 5);
    for (size_t i = 0; i < anti.size(); ++i)
      for (size_t j = i + 1; j < anti.size(); ++j) CHECK(perp(anti[i], anti[j]));
  }
}

TEST_CASE("comparable pairs come out ordered") {
  Sampler s(15);
  for (int it = 0; it < 100; ++it) {
    auto [lo, hi] = s.random_comparable_pair();
    CHECK(lt(lo, hi));
  }
}

TEST_CASE("probes hit several positions relative to the base") {
  Sampler s(16);
  std::vector<Node> base = s.random_node_set(4);
  bool saw_comparable = false, saw_perp = false;
  for (int it = 0; it < 120; ++it) {
    Node p = s.random_probe(base);
    CHECK_NOTHROW(validate_node(p));
    for (const Node& b : base) {
      if (p == b) continue;
      (perp(p, b) ? saw_perp : saw_comparable) = true;
    }
  }
  CHECK(saw_comparable);
  CHECK(saw_perp);
}

TEST_CASE("uniform_long stays inside its bounds") {
  Sampler s(17);
  std::set<long> seen;
  for (int i = 0; i < 200; ++i) {
    long v = s.uniform_long(-3, 3);
    CHECK(v >= -3);
    CHECK(v <= 3);
    seen.insert(v);
  }
  CHECK(seen.size() > 3);  // not stuck on a constant
}
