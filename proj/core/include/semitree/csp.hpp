#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "semitree/relations.hpp"
#include "semitree/structure.hpp"

namespace semitree {

struct Atom {
  RelationName rel;
  std::vector<int> args;  // variable indices
};

struct ConstraintInstance {
  std::vector<std::string> variables;  // in order of first appearance
  std::vector<Atom> atoms;
};

// One constraint per line: `x < y`, `x <= y`, `x > y`, `x >= y`, `x = y`,
// `x != y`, `x || y`, `B(x,y,z)`, `C(z, x y)`, `R(x,y,z)`, `D(x,y,u,v)`.
// Blank lines and `#` comments are ignored. Throws std::invalid_argument.
ConstraintInstance parse_instance(const std::string& text);

using Assignment = std::map<std::string, Node>;

// Deterministic backtracking search over the witness grid of the partial
// assignment; returns the first satisfying assignment found, if any.
// Instances with more than var_bound variables are rejected.
std::optional<Assignment> solve(const ConstraintInstance& instance, int var_bound = 7);

// Satisfiability decided by mapping variables into enumerated substructures
// of every size up to the variable count (capped at var_bound).
bool brute_force_oracle(const ConstraintInstance& instance, int var_bound = 5);

struct CheckResult {
  bool ok = true;
  std::optional<int> failing_atom;
};

CheckResult check(const ConstraintInstance& instance, const Assignment& assignment);

// Atom evaluation inside an abstract structure (points = indices).
bool eval_atom_in_structure(const FiniteStructure& s, const Atom& atom,
                            const std::vector<int>& points);

nlohmann::json assignment_to_json(const Assignment& assignment);
std::string atom_to_string(const ConstraintInstance& instance, const Atom& atom);

}  // namespace semitree
