#pragma once

#include <set>
#include <vector>

#include "semitree/relations.hpp"

namespace semitree {

// Density: a node z with a < z < b. Requires a < b (deeper first);
// throws std::invalid_argument naming the violated relation otherwise.
Node between(const Node& a, const Node& b);

// Unboundedness: strict neighbors on a's own path.
Node above(const Node& a);
Node below(const Node& a);

// Binary branching / niceness: a node incomparable to `a` whose divergence
// from `a` lies strictly inside (lo, hi) (clamped to a's path, i.e. below
// depth(a)) and avoids the positions in `avoid` as well as a's own turns.
// Throws std::invalid_argument when the bracket is empty.
Node branch_off(const Node& a, const Rat& lo, const Rat& hi,
                const std::set<Rat>& avoid = {});

// The interpolation witness: a node x with u < x for all u in U, x < v for
// all v in V, and x perp w for all w in W, with divergence(x, w) equal to
// divergence(u, w) for every u in U (so x attaches to the tree exactly where
// U does, as seen from W).
//
// Preconditions (checked; std::invalid_argument names the first failure):
//   - U non-empty;
//   - u < v for every u in U, v in V;
//   - rel_C(w, u1, u2) for every w in W and every pair of distinct u1, u2;
//   - when |U| = 1: w perp u for every w in W.
// The postcondition is mechanically re-verified before returning; a failure
// there is a std::logic_error (it would indicate a model bug).
Node interpolant(const std::vector<Node>& U, const std::vector<Node>& V,
                 const std::vector<Node>& W);

}  // namespace semitree
