#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "semitree/structure.hpp"

namespace semitree {

// Type of an ordered pair in a structure equipped with a convex linear order:
// comparability direction, or incomparability split by the convex order.
enum class PairType : int { LT = 0, GT = 1, PerpBefore = 2, PerpAfter = 3 };

PairType reverse_pair_type(PairType t);
std::string pair_type_to_string(PairType t);

// A rewrite rule on pair types. A well-formed (symmetric) behavior commutes
// with swapping the pair; asymmetric tables are accepted as input and fail
// the consistency check with a certificate.
struct Behavior {
  std::array<PairType, 4> image;

  static Behavior symmetric(PairType lt_image, PairType perp_before_image);
  bool is_symmetric() const;
  PairType apply(PairType t) const { return image[static_cast<int>(t)]; }
  bool operator==(const Behavior&) const = default;
};

std::string behavior_to_string(const Behavior& b);

struct BehaviorCertificate {
  FiniteStructure structure;   // source structure of the failing configuration
  std::vector<int> extension;  // its convex order, ascending
  std::string reason;
};

struct BehaviorCheck {
  bool consistent = true;
  std::optional<BehaviorCertificate> certificate;
};

// Checks whether rewriting the pair-type tables of every configuration of
// size 2..k (realizable structure + convex order) by b again yields a
// realizable configuration. k is capped at 4.
BehaviorCheck behavior_consistent(const Behavior& b, int k);

enum class BehaviorClass { Flat, Thin, OrderPreserving };
std::string behavior_class_to_string(BehaviorClass c);

struct SurvivingBehavior {
  Behavior behavior;
  BehaviorClass cls;
};

// The symmetric behaviors consistent at k = 3, each with its class. The
// classes partition the survivors; a violation of that partition is an
// internal error.
std::vector<SurvivingBehavior> enumerate_surviving_behaviors();

enum class OrbitLabel { BelowA, AboveA, PerpBeforeA, PerpAfterA };
std::string orbit_label_to_string(OrbitLabel l);

enum class PrecHint { TurnSideAfter, TurnSideBefore };

// Which of the four one-point-extension orbits over the parameter a the
// point p falls into. For incomparable p the split is fixed by declaring the
// turning side at the divergence to come after (or before, per hint).
OrbitLabel orbit_of(const Node& p, const Node& a, PrecHint hint = PrecHint::TurnSideAfter);

struct OneConstantCheck {
  std::string name;
  std::string detail;
  bool expected_realizable = false;
  bool observed_realizable = false;
  bool pass = false;
};

// The case distinctions behind the one-constant analysis: two image patterns
// that must be unrealizable, the rearrangement image pattern that must be
// realizable, and the vacuous empty configuration.
std::vector<OneConstantCheck> one_constant_checks();
std::string one_constant_report(const std::vector<OneConstantCheck>& checks);

}  // namespace semitree
