#include "semitree/relations.hpp"

#include <algorithm>
#include <stdexcept>

namespace semitree {

bool leq(const Node& a, const Node& b) {
  if (!(b.depth <= a.depth)) return false;
  // turns(b) must equal the prefix of turns(a) strictly above depth(b).
  size_t i = 0;
  for (const Rat& t : a.turns) {
    if (!(t < b.depth)) break;
    if (i >= b.turns.size() || b.turns[i] != t) return false;
    ++i;
  }
  return i == b.turns.size();
}

bool lt(const Node& a, const Node& b) { return leq(a, b) && !(a == b); }
bool gt(const Node& a, const Node& b) { return lt(b, a); }
bool geq(const Node& a, const Node& b) { return leq(b, a); }

namespace {

// Smallest element of the symmetric difference of the turn sets, if any.
std::optional<Rat> first_turn_difference(const Node& a, const Node& b) {
  const size_t m = std::min(a.turns.size(), b.turns.size());
  for (size_t i = 0; i < m; ++i) {
    if (a.turns[i] != b.turns[i]) return std::min(a.turns[i], b.turns[i]);
  }
  if (a.turns.size() > m) return a.turns[m];
  if (b.turns.size() > m) return b.turns[m];
  return std::nullopt;
}

}  // namespace

bool perp(const Node& a, const Node& b) {
  const auto d = first_turn_difference(a, b);
  return d && *d < std::min(a.depth, b.depth);
}

std::optional<Rat> divergence(const Node& a, const Node& b) {
  const auto d = first_turn_difference(a, b);
  if (d && *d < std::min(a.depth, b.depth)) return d;
  return std::nullopt;
}

bool rel_C(const Node& z, const Node& x, const Node& y) {
  const auto dxy = divergence(x, y);
  if (!dxy) return false;
  const auto dzx = divergence(z, x);
  return dzx && *dzx < *dxy;
}

bool rel_B(const Node& x, const Node& y, const Node& z) {
  return (lt(x, y) && lt(y, z)) || (lt(z, y) && lt(y, x)) ||
         (lt(x, y) && perp(y, z)) || (lt(z, y) && perp(y, x));
}

bool rel_R(const Node& x, const Node& y, const Node& z) {
  return rel_C(z, x, y) || (lt(x, z) && lt(y, z)) ||
         (perp(x, z) && perp(y, z) && (lt(x, y) || lt(y, x)));
}

bool rel_D(const Node& x, const Node& y, const Node& u, const Node& v) {
  return (rel_C(u, x, y) && rel_C(v, x, y)) || (rel_C(x, u, v) && rel_C(y, u, v));
}

bool chain_Betw(const Rat& x, const Rat& y, const Rat& z) {
  return (x < y && y < z) || (z < y && y < x);
}

bool chain_Cyc(const Rat& x, const Rat& y, const Rat& z) {
  return (x < y && y < z) || (y < z && z < x) || (z < x && x < y);
}

bool chain_Sep(const Rat& x1, const Rat& y1, const Rat& x2, const Rat& y2) {
  auto asc = [](const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
    return a < b && b < c && c < d;
  };
  return asc(x1, x2, y1, y2) || asc(x1, y2, y1, x2) || asc(y1, x2, x1, y2) ||
         asc(y1, y2, x1, x2) || asc(x2, x1, y2, y1) || asc(x2, y1, y2, x1) ||
         asc(y2, x1, x2, y1) || asc(y2, y1, x2, x1);
}

int relation_arity(RelationName r) {
  switch (r) {
    case RelationName::B:
    case RelationName::C:
    case RelationName::R:
      return 3;
    case RelationName::D:
      return 4;
    default:
      return 2;
  }
}

std::string relation_to_string(RelationName r) {
  switch (r) {
    case RelationName::eq: return "eq";
    case RelationName::neq: return "neq";
    case RelationName::leq: return "leq";
    case RelationName::lt: return "lt";
    case RelationName::gt: return "gt";
    case RelationName::geq: return "geq";
    case RelationName::perp: return "perp";
    case RelationName::B: return "B";
    case RelationName::C: return "C";
    case RelationName::R: return "R";
    case RelationName::D: return "D";
  }
  return "?";
}

RelationName relation_from_string(const std::string& name) {
  if (name == "eq" || name == "=" || name == "==") return RelationName::eq;
  if (name == "neq" || name == "!=") return RelationName::neq;
  if (name == "leq" || name == "<=") return RelationName::leq;
  if (name == "lt" || name == "<") return RelationName::lt;
  if (name == "gt" || name == ">") return RelationName::gt;
  if (name == "geq" || name == ">=") return RelationName::geq;
  if (name == "perp" || name == "||") return RelationName::perp;
  if (name == "B") return RelationName::B;
  if (name == "C") return RelationName::C;
  if (name == "R") return RelationName::R;
  if (name == "D") return RelationName::D;
  throw std::invalid_argument("unknown relation name '" + name + "'");
}

bool eval_relation(RelationName r, const std::vector<Node>& args) {
  if (static_cast<int>(args.size()) != relation_arity(r)) {
    throw std::invalid_argument("relation " + relation_to_string(r) +
                                " expects " + std::to_string(relation_arity(r)) +
                                " arguments, got " + std::to_string(args.size()));
  }
  switch (r) {
    case RelationName::eq: return args[0] == args[1];
    case RelationName::neq: return !(args[0] == args[1]);
    case RelationName::leq: return leq(args[0], args[1]);
    case RelationName::lt: return lt(args[0], args[1]);
    case RelationName::gt: return gt(args[0], args[1]);
    case RelationName::geq: return geq(args[0], args[1]);
    case RelationName::perp: return perp(args[0], args[1]);
    case RelationName::B: return rel_B(args[0], args[1], args[2]);
    case RelationName::C: return rel_C(args[0], args[1], args[2]);
    case RelationName::R: return rel_R(args[0], args[1], args[2]);
    case RelationName::D: return rel_D(args[0], args[1], args[2], args[3]);
  }
  throw std::logic_error("unreachable relation dispatch");
}

}  // namespace semitree
