#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semitree/node.hpp"

namespace semitree {

// a <= b iff b's path is an initial segment of a's path: depth(b) <= depth(a)
// and turns(b) = { t in turns(a) : t < depth(b) }. Deeper = smaller.
bool leq(const Node& a, const Node& b);
bool lt(const Node& a, const Node& b);
bool gt(const Node& a, const Node& b);
bool geq(const Node& a, const Node& b);

// Incomparability. Closed form: the symmetric difference of the turn sets
// has an element strictly below min(depth(a), depth(b)).
bool perp(const Node& a, const Node& b);

// For incomparable a, b: the position where the two paths split (min of the
// turn-set symmetric difference); absent for comparable pairs.
std::optional<Rat> divergence(const Node& a, const Node& b);

// C(z, xy): x and y are incomparable and some common upper bound of x, y is
// incomparable to z. Closed form: perp(x,y) && perp(z,x) &&
// divergence(z,x) < divergence(x,y).
bool rel_C(const Node& z, const Node& x, const Node& y);

// B(x,y,z): y lies between x and z along tree paths:
// (x<y<z) or (z<y<x) or (x<y && y perp z) or (z<y && y perp x).
bool rel_B(const Node& x, const Node& y, const Node& z);

// R(x,y,z): C(z,xy) or (x<z && y<z) or (x perp z && y perp z && (x<y || y<x)).
bool rel_R(const Node& x, const Node& y, const Node& z);

// D(x,y,u,v): (C(u,xy) && C(v,xy)) or (C(x,uv) && C(y,uv)).
bool rel_D(const Node& x, const Node& y, const Node& u, const Node& v);

// Reducts of the rational order, evaluated on exact rationals.
bool chain_Betw(const Rat& x, const Rat& y, const Rat& z);
bool chain_Cyc(const Rat& x, const Rat& y, const Rat& z);
bool chain_Sep(const Rat& x1, const Rat& y1, const Rat& x2, const Rat& y2);

enum class RelationName { eq, neq, leq, lt, gt, geq, perp, B, C, R, D };

int relation_arity(RelationName r);
std::string relation_to_string(RelationName r);
// Accepts the names above; throws std::invalid_argument otherwise.
RelationName relation_from_string(const std::string& name);

// Dispatch by name; C takes its arguments in writing order (z first).
// Throws std::invalid_argument on arity mismatch.
bool eval_relation(RelationName r, const std::vector<Node>& args);

}  // namespace semitree
