#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semitree/formula.hpp"

namespace semitree {

// Outcome of one generator family. A violation keeps the witnessing tuple
// and its image so it can be re-checked independently; "preserved" only
// means no violation was found in the sampled tests.
struct FamilyEvidence {
  std::string family;
  bool preserved = true;
  long tests = 0;
  std::vector<Node> pre_tuple;
  std::vector<Node> post_tuple;
};

struct Verdict {
  std::string label;  // "equality-class", "B-class" or "order-class"
  std::vector<FamilyEvidence> evidence;
  std::string caveat;
};

// Decides which reduct class the relation defined by phi indicates, by
// preservation tests under three generator families: arbitrary bijections
// between equal-sized node sets, rerootings with non-empty flipped chain,
// and partial-isomorphism extensions (the last is a sanity family; it can
// never legitimately fail). Verdict: equality-class if bijections never
// violate, else B-class if rerootings never violate, else order-class.
// Requires 1 <= arity <= 4. Deterministic for a fixed seed.
Verdict classify(const ParsedFormula& phi, std::uint64_t seed,
                 int sample_size = 200, int structure_bound = 5);

std::string verdict_to_string(const Verdict& v);

enum class ChainClass { Linear, BetwClass, CycClass, SepClass, EqualityClass };
std::string chain_class_to_string(ChainClass c);

// Classifies a formula over {<,=} on a dense chain by exhausting all order
// patterns of its arity (monotone maps preserve patterns, so pattern level
// is exact): preserved by all permutations of values -> equality-class;
// by reversal and rotation -> Sep-class; by rotation only -> Cyc-class;
// by reversal only -> Betw-class; otherwise linear. Arity 1..4; atoms must
// be order comparisons. sample_size is accepted for interface stability and
// only sanity-checked, since the pattern battery is already exhaustive.
ChainClass chain_classify(const ParsedFormula& psi, int sample_size = 64);

// Heuristic label for the model-complete core of the structure generated by
// the given relations: one of "one-element", "(Q;!=)", "(Q;<)", "(Q;Betw)",
// "(Q;Cyc)", "(Q;Sep)", "(L2;C)", "(L2;D)", "(S2;B)", "(S2;<,perp)".
struct CoreHint {
  std::string label;
  std::vector<std::string> evidence;
  bool heuristic = true;
};

CoreHint model_complete_core_hint(const std::vector<ParsedFormula>& phis,
                                  std::uint64_t seed, int sample_size = 60,
                                  int structure_bound = 5);

}  // namespace semitree
