#pragma once

#include <string>
#include <vector>

#include "semitree/relations.hpp"

namespace semitree {

// The quantifier-free {<,=,perp,C}-type of probe p over the base set:
// one relation code per base point plus every C-atom involving p.
std::string qf_type_signature(const Node& p, const std::vector<Node>& base);

// A finite, deterministic candidate set that realizes every quantifier-free
// 1-type over `base`: for each base point, a sitting point and a fresh branch
// inside every gap between consecutive landmarks of its path (landmarks:
// its own depth, depths of points above it, divergences with incomparable
// points, plus a one-unit headroom above the shallowest landmark), a point
// strictly below it, and the base points themselves (equality types).
// Candidates are de-duplicated by qf_type_signature, keeping generation
// order. Completeness is a tested property, not an assumption.
std::vector<Node> witness_grid(const std::vector<Node>& base);

}  // namespace semitree
