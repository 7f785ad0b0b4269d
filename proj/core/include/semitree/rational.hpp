#pragma once

#include <gmpxx.h>

#include <optional>
#include <set>
#include <string>

namespace semitree {

// Exact rational position. Always kept in canonical (reduced) form.
using Rat = mpq_class;

// A position is depth-class iff its reduced denominator is odd, and
// turn-class iff it is even. The two classes are disjoint and each is dense.
enum class Parity { Odd, Even };

bool is_depth_class(const Rat& r);
bool is_turn_class(const Rat& r);
bool has_parity(const Rat& r, Parity p);

// Parses "p/q" (reduced or not; canonicalized on read) or an integer "n".
// Throws std::invalid_argument on malformed input or zero denominator.
Rat parse_rational(const std::string& text);

// "p/q" for non-integers, "n" for integers; always reduced.
std::string rational_to_string(const Rat& r);

// The deterministic simplest-rational rule used by every witness
// constructor: among reduced fractions p/q in the open interval (lo, hi)
// whose reduced denominator has the requested parity, minimize q; among
// those, pick p/q nearest to `bias` (midpoint of the interval when absent);
// break ties toward the smaller numerator. `exclude` removes individual
// candidate values (used when a fresh turn position must avoid existing
// turns). Throws std::invalid_argument unless lo < hi.
Rat simplest_in(const Rat& lo, const Rat& hi, Parity parity,
                const std::optional<Rat>& bias = std::nullopt,
                const std::set<Rat>& exclude = {});

}  // namespace semitree
