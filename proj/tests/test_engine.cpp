#include <doctest.h>

#include <algorithm>
#include <array>

#include "helpers.hpp"
#include "semitree/engine.hpp"
#include "semitree/sampler.hpp"

using namespace semitree;
using semitree::test::mk;

namespace {

FiniteStructure make(int n, const std::vector<std::pair<int, int>>& lt_pairs,
                     const std::vector<std::array<int, 3>>& cs = {}) {
  FiniteStructure s;
  s.n = n;
  s.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) s.leq[i][i] = true;
  for (auto [a, b] : lt_pairs) s.leq[a][b] = true;
  for (const auto& t : cs) s.add_C(t[0], t[1], t[2]);
  return s;
}

}  // namespace

TEST_CASE("partial iso validation catches each violation kind") {
  CHECK_NOTHROW(validate_partial_iso({{mk({}, "1")}, {mk({}, "3")}}));
  // size mismatch
  CHECK_THROWS_AS(validate_partial_iso({{mk({}, "1")}, {}}), std::invalid_argument);
  // duplicate domain point
  CHECK_THROWS_AS(
      validate_partial_iso({{mk({}, "1"), mk({}, "1")}, {mk({}, "1"), mk({}, "3")}}),
      std::invalid_argument);
  // order flip
  CHECK_THROWS_AS(
      validate_partial_iso(
          {{mk({}, "2"), mk({}, "1")}, {mk({}, "1"), mk({}, "2")}}),
      std::invalid_argument);
  // C broken: domain has an early departure, range divergences reshuffled
  PartialIso rho;
  rho.domain = {mk({"1/4"}, "1"), mk({"1/2"}, "1"), mk({}, "1")};
  rho.range = {mk({"3/4"}, "1"), mk({"1/2"}, "1"), mk({}, "1")};
  CHECK_THROWS_AS(validate_partial_iso(rho), std::invalid_argument);
}

TEST_CASE("embed realizes the basic shapes exactly") {
  for (const FiniteStructure& s :
       {make(3, {{0, 1}, {0, 2}, {1, 2}}), make(3, {{0, 2}, {1, 2}}),
        make(3, {{0, 1}}), make(3, {}, {{{0, 1, 2}}})}) {
    EmbedResult r = embed_structure(s);
    REQUIRE_MESSAGE(r.ok(), (r.rejection ? r.rejection->reason : ""));
    CHECK(induced_structure(*r.nodes) == s);
  }
}

TEST_CASE("embed rejects shapes outside the age") {
  // incomparable pair above a common lower point
  EmbedResult lambda = embed_structure(make(3, {{0, 1}, {0, 2}}));
  CHECK_FALSE(lambda.ok());
  CHECK(lambda.rejection->reason.find("chain") != std::string::npos);

  // two C outsiders on one antichain triple
  EmbedResult twoc = embed_structure(make(3, {}, {{{0, 1, 2}}, {{1, 0, 2}}}));
  CHECK_FALSE(twoc.ok());
  CHECK(twoc.rejection->point_index >= 0);

  // 3-antichain with no C at all: the pigeonhole forces exactly one
  EmbedResult bare = embed_structure(make(3, {}));
  CHECK_FALSE(bare.ok());
}

TEST_CASE("embed round trip on random induced structures") {
  Sampler sampler(41);
  for (int it = 0; it < 50; ++it) {
    std::vector<Node> pts = sampler.random_node_set(2 + it % 5);
    FiniteStructure s = induced_structure(pts);
    EmbedResult r = embed_structure(s);
    REQUIRE_MESSAGE(r.ok(), (r.rejection ? r.rejection->reason : ""));
    CHECK(induced_structure(*r.nodes) == s);
  }
}

TEST_CASE("extend_partial_iso adds one point and stays an isomorphism") {
  Sampler sampler(42);
  for (int it = 0; it < 40; ++it) {
    std::vector<Node> pts = sampler.random_node_set(3 + it % 3);
    EmbedResult r = embed_structure(induced_structure(pts));
    REQUIRE(r.ok());
    PartialIso rho{pts, *r.nodes};
    Node probe = sampler.random_probe(pts);
    if (std::find(pts.begin(), pts.end(), probe) != pts.end()) continue;
    PartialIso ext = extend_partial_iso(rho, probe);
    CHECK(ext.domain.size() == pts.size() + 1);
    CHECK(ext.domain.back() == probe);
    CHECK_NOTHROW(validate_partial_iso(ext));
  }
}

TEST_CASE("extend_partial_iso rejects invalid input") {
  PartialIso broken{{mk({}, "2"), mk({}, "1")}, {mk({}, "1"), mk({}, "2")}};
  CHECK_THROWS_AS(extend_partial_iso(broken, mk({}, "0")), std::invalid_argument);
  PartialIso rho{{mk({}, "1")}, {mk({}, "1")}};
  CHECK_THROWS_AS(extend_partial_iso(rho, mk({}, "1")), std::invalid_argument);
}

TEST_CASE("homogeneity_extend completes a seeded pairing") {
  Sampler sampler(43);
  for (int it = 0; it < 30; ++it) {
    const int n = 3 + it % 3;
    std::vector<Node> a = sampler.random_node_set(n);
    EmbedResult r = embed_structure(induced_structure(a));
    REQUIRE(r.ok());
    std::vector<Node> b = *r.nodes;

    std::vector<std::pair<int, int>> pairing;
    for (int i = 0; i < n / 2; ++i) pairing.emplace_back(i, i);
    Node probe = sampler.random_probe(a);
    std::vector<Node> extra;
    if (std::find(a.begin(), a.end(), probe) == a.end()) extra.push_back(probe);

    PartialIso rho = homogeneity_extend(a, b, pairing, extra);
    CHECK(rho.domain.size() == a.size() + extra.size());
    CHECK_NOTHROW(validate_partial_iso(rho));
  }
}

TEST_CASE("homogeneity_extend rejects bad pairings") {
  std::vector<Node> a = {mk({}, "1"), mk({}, "2")};
  std::vector<Node> b = {mk({}, "3"), mk({}, "4")};
  CHECK_THROWS_AS(homogeneity_extend(a, b, {{0, 5}}, {}), std::invalid_argument);
  CHECK_THROWS_AS(homogeneity_extend(a, b, {{0, 0}, {0, 1}}, {}),
                  std::invalid_argument);
  // crossed pairing maps the higher point to the lower one: order flips
  CHECK_THROWS_AS(homogeneity_extend(a, b, {{0, 1}, {1, 0}}, {}),
                  std::invalid_argument);
}
