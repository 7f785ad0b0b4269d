#pragma once

#include <vector>

#include "semitree/structure.hpp"

namespace semitree {

struct LabeledStructure {
  FiniteStructure structure;
  std::vector<Node> realization;  // witnessing nodes, positionally
};

// Every labeled {<=, C}-structure on points 0..n-1 realized by some node set,
// each with one concrete realization. Deterministic order. Throws
// std::invalid_argument if n < 0 or n exceeds the bound.
const std::vector<LabeledStructure>& enumerate_labeled_age_structures(int n,
                                                                      int bound = 6);

// Representatives of the n-point substructures, deduplicated by
// canonical_key (order table up to relabeling, C placement kept separate),
// in deterministic order. Each representative is the lexicographically
// least labeled presentation in its class.
std::vector<FiniteStructure> enumerate_age_structures(int n, int bound = 6);

}  // namespace semitree
