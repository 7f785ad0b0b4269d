#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "semitree/relations.hpp"

namespace semitree {

// Seeded source of random rationals, nodes and node sets. All draws go
// through next_u64 so results are reproducible across platforms.
class Sampler {
 public:
  explicit Sampler(uint64_t seed) : rng_(seed) {}

  uint64_t next_u64() { return rng_(); }
  long uniform_long(long lo, long hi);  // inclusive bounds
  bool coin() { return (next_u64() & 1) != 0; }

  Rat random_rational(Parity parity);
  Node random_node();

  // A fresh point positioned relative to base (below / between / branching
  // off / unrelated), independent of the deterministic witness constructions
  // used elsewhere.
  Node random_probe(const std::vector<Node>& base);

  std::vector<Node> random_node_set(int k);
  std::vector<Node> random_antichain(int k);

  // A random comparable pair (first < second) with a distinct witness set.
  std::pair<Node, Node> random_comparable_pair();

 private:
  std::mt19937_64 rng_;
};

}  // namespace semitree
