#include "semitree/csp.hpp"

#include <algorithm>
#include <stdexcept>

#include "semitree/enumeration.hpp"
#include "semitree/formula.hpp"
#include "semitree/grid.hpp"

namespace semitree {

ConstraintInstance parse_instance(const std::string& text) {
  ConstraintInstance instance;
  std::map<std::string, int> index;
  size_t start = 0;
  int line_no = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    std::string line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (size_t hash = line.find('#'); hash != std::string::npos) {
      line.resize(hash);
    }
    const bool blank =
        std::all_of(line.begin(), line.end(),
                    [](unsigned char c) { return std::isspace(c) != 0; });
    if (blank) {
      if (end == text.size()) break;
      continue;
    }

    ParsedFormula pf;
    try {
      pf = parse_formula(line);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (pf.formula.kind != FormulaKind::Atom) {
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": expected a single constraint per line");
    }
    Atom atom;
    atom.rel = pf.formula.rel;
    for (int local : pf.formula.args) {
      const std::string& name = pf.variables[local];
      auto it = index.find(name);
      if (it == index.end()) {
        it = index.emplace(name, static_cast<int>(instance.variables.size())).first;
        instance.variables.push_back(name);
      }
      atom.args.push_back(it->second);
    }
    instance.atoms.push_back(std::move(atom));
    if (end == text.size()) break;
  }
  return instance;
}

std::string atom_to_string(const ConstraintInstance& instance, const Atom& atom) {
  QfFormula f;
  f.kind = FormulaKind::Atom;
  f.rel = atom.rel;
  f.args = atom.args;
  return formula_to_string(f, instance.variables);
}

bool eval_atom_in_structure(const FiniteStructure& s, const Atom& atom,
                            const std::vector<int>& points) {
  auto p = [&](int k) { return points[atom.args[k]]; };
  switch (atom.rel) {
    case RelationName::eq:
      return p(0) == p(1);
    case RelationName::neq:
      return p(0) != p(1);
    case RelationName::leq:
      return s.leq_at(p(0), p(1));
    case RelationName::lt:
      return s.lt_at(p(0), p(1));
    case RelationName::gt:
      return s.lt_at(p(1), p(0));
    case RelationName::geq:
      return s.leq_at(p(1), p(0));
    case RelationName::perp:
      return s.perp_at(p(0), p(1));
    case RelationName::C:
      return s.has_C(p(0), p(1), p(2));
    case RelationName::B: {
      const int x = p(0), y = p(1), z = p(2);
      return (s.lt_at(x, y) && s.lt_at(y, z)) || (s.lt_at(z, y) && s.lt_at(y, x)) ||
             (s.lt_at(x, y) && s.perp_at(y, z)) || (s.lt_at(z, y) && s.perp_at(y, x));
    }
    case RelationName::R: {
      const int x = p(0), y = p(1), z = p(2);
      return s.has_C(z, x, y) || (s.lt_at(x, z) && s.lt_at(y, z)) ||
             (s.perp_at(x, z) && s.perp_at(y, z) && (s.lt_at(x, y) || s.lt_at(y, x)));
    }
    case RelationName::D: {
      const int x = p(0), y = p(1), u = p(2), v = p(3);
      return (s.has_C(u, x, y) && s.has_C(v, x, y)) ||
             (s.has_C(x, u, v) && s.has_C(y, u, v));
    }
  }
  return false;
}

namespace {

std::vector<std::vector<int>> atoms_by_deepest_var(const ConstraintInstance& instance,
                                                   int nvars) {
  std::vector<std::vector<int>> buckets(std::max(nvars, 1));
  for (size_t i = 0; i < instance.atoms.size(); ++i) {
    int deepest = 0;
    for (int a : instance.atoms[i].args) deepest = std::max(deepest, a);
    buckets[deepest].push_back(static_cast<int>(i));
  }
  return buckets;
}

bool solve_dfs(const ConstraintInstance& instance,
               const std::vector<std::vector<int>>& buckets, std::vector<Node>& chosen,
               int k) {
  const int nvars = static_cast<int>(instance.variables.size());
  if (k == nvars) return true;
  std::vector<Node> candidates = witness_grid(chosen);
  std::sort(candidates.begin(), candidates.end(), node_less);
  for (const Node& cand : candidates) {
    chosen.push_back(cand);
    bool ok = true;
    for (int ai : buckets[k]) {
      const Atom& atom = instance.atoms[ai];
      std::vector<Node> args;
      args.reserve(atom.args.size());
      for (int v : atom.args) args.push_back(chosen[v]);
      if (!eval_relation(atom.rel, args)) {
        ok = false;
        break;
      }
    }
    if (ok && solve_dfs(instance, buckets, chosen, k + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

bool oracle_dfs(const ConstraintInstance& instance, const FiniteStructure& s,
                const std::vector<std::vector<int>>& buckets, std::vector<int>& chosen,
                int k) {
  const int nvars = static_cast<int>(instance.variables.size());
  if (k == nvars) return true;
  for (int pt = 0; pt < s.n; ++pt) {
    chosen.push_back(pt);
    bool ok = true;
    for (int ai : buckets[k]) {
      if (!eval_atom_in_structure(s, instance.atoms[ai], chosen)) {
        ok = false;
        break;
      }
    }
    if (ok && oracle_dfs(instance, s, buckets, chosen, k + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<Assignment> solve(const ConstraintInstance& instance, int var_bound) {
  const int nvars = static_cast<int>(instance.variables.size());
  if (nvars > var_bound) {
    throw std::invalid_argument("solve: instance has " + std::to_string(nvars) +
                                " variables, bound is " + std::to_string(var_bound));
  }
  for (const Atom& atom : instance.atoms) {
    if (static_cast<int>(atom.args.size()) != relation_arity(atom.rel)) {
      throw std::invalid_argument("solve: atom arity mismatch");
    }
  }
  auto buckets = atoms_by_deepest_var(instance, nvars);
  std::vector<Node> chosen;
  if (!solve_dfs(instance, buckets, chosen, 0)) return std::nullopt;

  Assignment assignment;
  for (int v = 0; v < nvars; ++v) assignment.emplace(instance.variables[v], chosen[v]);
  CheckResult final_check = check(instance, assignment);
  if (!final_check.ok) {
    throw std::logic_error("solve: produced assignment fails atom " +
                           std::to_string(*final_check.failing_atom));
  }
  return assignment;
}

bool brute_force_oracle(const ConstraintInstance& instance, int var_bound) {
  const int nvars = static_cast<int>(instance.variables.size());
  if (nvars > var_bound) {
    throw std::invalid_argument("brute_force_oracle: instance has " +
                                std::to_string(nvars) + " variables, bound is " +
                                std::to_string(var_bound));
  }
  if (nvars == 0) return true;
  auto buckets = atoms_by_deepest_var(instance, nvars);
  for (int k = 1; k <= nvars; ++k) {
    for (const FiniteStructure& s : enumerate_age_structures(k)) {
      std::vector<int> chosen;
      if (oracle_dfs(instance, s, buckets, chosen, 0)) return true;
    }
  }
  return false;
}

CheckResult check(const ConstraintInstance& instance, const Assignment& assignment) {
  for (const std::string& var : instance.variables) {
    if (assignment.find(var) == assignment.end()) {
      throw std::invalid_argument("check: assignment is missing variable " + var);
    }
  }
  CheckResult result;
  for (size_t i = 0; i < instance.atoms.size(); ++i) {
    const Atom& atom = instance.atoms[i];
    std::vector<Node> args;
    for (int v : atom.args) args.push_back(assignment.at(instance.variables[v]));
    if (!eval_relation(atom.rel, args)) {
      result.ok = false;
      result.failing_atom = static_cast<int>(i);
      return result;
    }
  }
  return result;
}

nlohmann::json assignment_to_json(const Assignment& assignment) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [var, node] : assignment) j[var] = node_to_json(node);
  return j;
}

}  // namespace semitree
