#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semitree/structure.hpp"

namespace semitree {

// A finite partial isomorphism of the tree order, kept as parallel vectors.
struct PartialIso {
  std::vector<Node> domain;
  std::vector<Node> range;
};

// Throws std::invalid_argument describing the first violation if rho is not
// a partial isomorphism for {<=, C}.
void validate_partial_iso(const PartialIso& rho);

struct AgeRejection {
  int point_index = -1;  // first point that could not be realized
  std::string reason;
};

struct EmbedResult {
  std::optional<std::vector<Node>> nodes;  // images, positionally
  std::optional<AgeRejection> rejection;
  bool ok() const { return nodes.has_value(); }
};

// Extends rho by one more source point p, returning the enlarged pairing.
// Throws std::invalid_argument if rho is invalid or p is already mapped,
// and std::logic_error if the extension cannot be completed (which would
// contradict homogeneity and indicates an internal fault).
PartialIso extend_partial_iso(const PartialIso& rho, const Node& p);

// Realizes an abstract {<=, C}-structure with concrete nodes, or reports the
// first point admitting no image. Table-level garbage is never fatal: every
// unrealizable input yields a rejection, not an exception (apart from
// dimension errors surfaced by validate()).
EmbedResult embed_structure(const FiniteStructure& a);

// Completes the given pairing (a[i] -> b[j] for each (i,j)) to a partial
// isomorphism defined on all of a and on the extra points. Preconditions
// (valid initial pairing, unmapped extension points) are enforced with
// std::invalid_argument.
PartialIso homogeneity_extend(const std::vector<Node>& a,
                              const std::vector<Node>& b,
                              const std::vector<std::pair<int, int>>& iso,
                              const std::vector<Node>& extra);

}  // namespace semitree
