#pragma once

#include <string>
#include <vector>

#include "semitree/node.hpp"

namespace semitree::test {

// Shorthand node builder: mk({"1/2","5/2"}, "8/3").
inline Node mk(const std::vector<std::string>& turns, const std::string& depth) {
  Node n;
  for (const std::string& t : turns) n.turns.push_back(parse_rational(t));
  n.depth = parse_rational(depth);
  return n;
}

}  // namespace semitree::test
