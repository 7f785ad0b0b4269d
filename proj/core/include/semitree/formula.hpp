#pragma once

#include <string>
#include <vector>

#include "semitree/relations.hpp"

namespace semitree {

enum class FormulaKind { Atom, Not, And, Or };

// Quantifier-free formula over the relations of the model. Atoms hold
// variable indices; `variables` in ParsedFormula maps them back to names.
struct QfFormula {
  FormulaKind kind = FormulaKind::Atom;
  RelationName rel = RelationName::eq;  // for atoms
  std::vector<int> args;                // for atoms
  std::vector<QfFormula> children;      // for connectives
};

struct ParsedFormula {
  QfFormula formula;
  std::vector<std::string> variables;  // in order of first appearance
};

// Grammar: disjunction of conjunctions of (possibly negated) atoms, with
// parentheses. Atoms are infix (x < y, x <= y, x = y, x != y, x || y and the
// mirrored forms) or functional: B(x,y,z), C(z, x y), R(x,y,z), D(x,y,u,v).
// "||" is the incomparability relation; a single "|" is disjunction.
ParsedFormula parse_formula(const std::string& text);

bool eval_formula(const QfFormula& f, const std::vector<Node>& tuple);

// Evaluation over a dense linear order: incomparability and C atoms are
// false, and the ternary/quaternary relations reduce to their order parts.
bool eval_formula_on_chain(const QfFormula& f, const std::vector<Rat>& tuple);

std::string formula_to_string(const QfFormula& f,
                              const std::vector<std::string>& variables);

}  // namespace semitree
