#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "semitree/relations.hpp"

namespace semitree {

// A finite map presented pointwise: image[i] is the image of source[i].
struct MappedSet {
  std::vector<Node> source;
  std::vector<Node> image;
};

struct RerootSpec {
  std::optional<Node> pivot;               // S = up-closure of pivot in the set
  std::optional<std::vector<Node>> chain;  // or an explicit upward-closed chain
};

// Order-reversing rearrangement around a chain S: the chain flips, points off
// the chain keep their mutual order pattern, and comparability/incomparability
// across the chain boundary swap. Throws std::invalid_argument for invalid
// specs (S not a chain, or not upward closed within the set).
MappedSet reroot(const std::vector<Node>& points, const RerootSpec& spec);

struct PreservationResult {
  bool preserved = true;
  std::optional<std::vector<int>> counterexample;  // indices of first failing tuple
};

PreservationResult verify_preserves(const MappedSet& mapped, RelationName rel);

// Image is an antichain; triples realize R(a,b,c) as C(f(c), f(a) f(b)).
MappedSet flatten(const std::vector<Node>& points);

// Image is a chain ordered by depth; ties are separated deterministically
// without crossing any other occupied depth.
MappedSet project_to_chain(const std::vector<Node>& points);

enum class MapClass { Flat, Thin, OrderPreserving, RerootingLike, Other };
std::string map_class_to_string(MapClass c);

// First matching category in the order flat, thin, order-preserving,
// rerooting-like, other.
MapClass classify_finite_map(const MappedSet& mapped);

// For pairwise-incomparable points: a pair of indices whose transposition
// (fixing everything else) is an isomorphism of the induced structure.
std::optional<std::pair<int, int>> flip_pair(const std::vector<Node>& points);

nlohmann::json mapped_set_to_json(const MappedSet& m);
MappedSet mapped_set_from_json(const nlohmann::json& j);

}  // namespace semitree
