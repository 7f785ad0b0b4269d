#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace semitree {

struct AxiomCheck {
  std::string name;
  long samples = 0;
  long violations = 0;
  std::string first_counterexample;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool all_passed() const;
};

// Randomized verification of the defining first-order properties: partial
// order laws, up-sets forming chains, common upper bounds, density and
// unboundedness witnesses, strict refinement of common upper bounds (no
// joins), branching witnesses, and the one-C-per-incomparable-triple law.
AxiomReport run_axiom_suite(long samples, uint64_t seed);

std::string axiom_report_to_string(const AxiomReport& report);

// Disagreements between the closed-form C relation and a witness-based
// search over a grid of path points straddling every divergence position.
long count_rel_C_oracle_disagreements(long samples, uint64_t seed);

// Disagreements between the direct negation of B and its witness identity
// (equal points, or a point between the outer pair in both senses).
long count_negB_identity_disagreements(long samples, uint64_t seed);

}  // namespace semitree
