#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "semitree/rational.hpp"

namespace semitree {

// A point of the model: a path in a downward-growing binary tree. `turns`
// records the (turn-class) positions where the path takes the branching
// side; `depth` is the (depth-class) position of the point itself. All
// turns lie strictly above the depth. Deeper points are smaller in the
// order: leq(a, b) holds iff b is an initial segment of a's path.
struct Node {
  std::vector<Rat> turns;  // strictly increasing, all turn-class
  Rat depth;               // depth-class

  bool operator==(const Node& other) const {
    return depth == other.depth && turns == other.turns;
  }
  bool operator!=(const Node& other) const { return !(*this == other); }
};

// Throws std::invalid_argument with a diagnostic naming the offending
// position when an invariant fails.
void validate_node(const Node& n);

// Deterministic total order used for all tie-breaking: lexicographic on the
// turn sequence, then shorter turn list first, then smaller depth.
bool node_less(const Node& a, const Node& b);

struct NodeLess {
  bool operator()(const Node& a, const Node& b) const { return node_less(a, b); }
};

// Compact human-readable form, e.g. "<{1/2,5/2};8/3>".
std::string node_to_string(const Node& n);

// JSON: {"turns": ["1/2","5/2"], "depth": "8/3"}; rationals are reduced
// "p/q" strings (integer shorthand "n" and plain JSON integers accepted on
// input). Parity violations are rejected with a diagnostic naming the
// offending position.
nlohmann::json node_to_json(const Node& n);
Node node_from_json(const nlohmann::json& j);

// Convenience: parse a node from a JSON string.
Node node_from_json_text(const std::string& text);

}  // namespace semitree
