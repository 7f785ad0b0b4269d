#pragma once

#include <array>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "semitree/relations.hpp"

namespace semitree {

// A finite structure in the language {<=, C} presented by tables.
// C triples are stored normalized as (z, min(x,y), max(x,y)).
struct FiniteStructure {
  int n = 0;
  std::vector<std::vector<bool>> leq;     // leq[i][j]  <=>  i <= j
  std::set<std::array<int, 3>> c_triples;

  bool leq_at(int i, int j) const { return leq[i][j]; }
  bool lt_at(int i, int j) const { return i != j && leq[i][j] && !leq[j][i]; }
  bool perp_at(int i, int j) const { return i != j && !leq[i][j] && !leq[j][i]; }
  bool has_C(int z, int x, int y) const;
  void add_C(int z, int x, int y);

  bool operator==(const FiniteStructure& other) const = default;

  // Key identifying the labeled structure exactly.
  std::string labeled_key() const;
  // Deduplication key: the order table is canonicalized over all
  // relabelings and the C triples are read through the first relabeling
  // attaining that table. Distinct C placements on a symmetric order table
  // (e.g. the three single-C antichains) stay distinct on purpose.
  std::string canonical_key() const;
};

// Structural well-formedness and order/C laws. Returns a list of violation
// descriptions (empty means valid). Throws std::invalid_argument on
// dimension mismatches, out-of-range indices, or degenerate C triples.
std::vector<std::string> validate(const FiniteStructure& s);

FiniteStructure induced_structure(const std::vector<Node>& points);

// All isomorphisms A -> B as permutations sigma with sigma[i] = image of i,
// enumerated in lexicographic order of sigma.
std::vector<std::vector<int>> find_isomorphisms(const FiniteStructure& a,
                                                const FiniteStructure& b);

// A linear order on the points of s, listed ascending, is convex when
//   (1) i < j in s implies i precedes j,
//   (2) no point lands strictly between a comparable pair a < b when it is
//       incomparable to b,
//   (3) for C(x, y z), x is placed either before both or after both of y, z.
bool convex_order_ok(const FiniteStructure& s, const std::vector<int>& order);

// The complete list of convex linear orders of s (each a vector of point
// indices, ascending). Requires s to embed into the tree order; throws
// std::invalid_argument otherwise.
std::vector<std::vector<int>> convex_extensions(const FiniteStructure& s);

nlohmann::json structure_to_json(const FiniteStructure& s);
FiniteStructure structure_from_json(const nlohmann::json& j);

}  // namespace semitree
