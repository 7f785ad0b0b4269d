#include <doctest.h>

#include "helpers.hpp"
#include "semitree/node.hpp"

using namespace semitree;
using semitree::test::mk;

TEST_CASE("node validation accepts well-formed paths") {
  CHECK_NOTHROW(validate_node(mk({}, "0")));
  CHECK_NOTHROW(validate_node(mk({"1/2", "5/2"}, "8/3")));
  CHECK_NOTHROW(validate_node(mk({"-3/2"}, "-1")));
}

TEST_CASE("node validation rejects parity and ordering faults") {
  CHECK_THROWS_AS(validate_node(mk({}, "1/2")), std::invalid_argument);    // turn-class depth
  CHECK_THROWS_AS(validate_node(mk({"1"}, "2")), std::invalid_argument);   // depth-class turn
  CHECK_THROWS_AS(validate_node(mk({"3/2", "1/2"}, "2")), std::invalid_argument);
  CHECK_THROWS_AS(validate_node(mk({"1/2", "1/2"}, "2")), std::invalid_argument);
  CHECK_THROWS_AS(validate_node(mk({"5/2"}, "1")), std::invalid_argument);  // turn at/after depth
}

TEST_CASE("node_less is a strict total order on distinct nodes") {
  std::vector<Node> nodes = {
      mk({}, "0"), mk({}, "1"), mk({"1/2"}, "1"), mk({"1/2", "3/2"}, "2"),
      mk({"-1/2"}, "3")};
  for (size_t i = 0; i < nodes.size(); ++i) {
    CHECK_FALSE(node_less(nodes[i], nodes[i]));
    for (size_t j = 0; j < nodes.size(); ++j) {
      if (i == j) continue;
      CHECK(node_less(nodes[i], nodes[j]) != node_less(nodes[j], nodes[i]));
    }
  }
  CHECK(node_less(mk({}, "1"), mk({"1/2"}, "1")));  // shorter turn list first
}

TEST_CASE("node JSON round trip") {
  Node n = mk({"1/2", "5/2"}, "8/3");
  CHECK(node_from_json(node_to_json(n)) == n);
  CHECK(node_to_json(n)["depth"] == "8/3");
  CHECK(node_from_json_text(R"({"turns":[],"depth":3})") == mk({}, "3"));
}

TEST_CASE("node JSON rejects wrong parity with a position diagnostic") {
  CHECK_THROWS_WITH_AS(static_cast<void>(node_from_json_text(R"({"turns":["1/3"],"depth":"1"})")),
                       doctest::Contains("turn"), std::invalid_argument);
  CHECK_THROWS_AS(static_cast<void>(node_from_json_text(R"({"turns":[],"depth":"1/2"})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(static_cast<void>(node_from_json_text("[]")), std::invalid_argument);
}

TEST_CASE("node printing is compact") {
  CHECK(node_to_string(mk({"1/2"}, "1")) == "<{1/2};1>");
  CHECK(node_to_string(mk({}, "0")) == "<{};0>");
}
