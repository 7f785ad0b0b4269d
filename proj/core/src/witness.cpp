#include "semitree/witness.hpp"

#include <algorithm>
#include <stdexcept>

namespace semitree {

namespace {

std::vector<Rat> turns_below(const std::vector<Rat>& turns, const Rat& cut) {
  std::vector<Rat> out;
  for (const Rat& t : turns) {
    if (!(t < cut)) break;
    out.push_back(t);
  }
  return out;
}

}  // namespace

Node between(const Node& a, const Node& b) {
  if (!lt(a, b)) {
    throw std::invalid_argument("between: precondition a < b violated for " +
                                node_to_string(a) + ", " + node_to_string(b));
  }
  const Rat delta = simplest_in(b.depth, a.depth, Parity::Odd);
  return Node{turns_below(a.turns, delta), delta};
}

Node above(const Node& a) {
  const Rat d = a.depth - 1;
  return Node{turns_below(a.turns, d), d};
}

Node below(const Node& a) { return Node{a.turns, a.depth + 1}; }

Node branch_off(const Node& a, const Rat& lo, const Rat& hi,
                const std::set<Rat>& avoid) {
  const Rat hi_eff = std::min(hi, a.depth);
  if (!(lo < hi_eff)) {
    throw std::invalid_argument(
        "branch_off: empty divergence bracket (requires lo < min(hi, depth)) for " +
        node_to_string(a));
  }
  std::set<Rat> exclude = avoid;
  for (const Rat& t : a.turns) exclude.insert(t);
  const Rat g = simplest_in(lo, hi_eff, Parity::Even, lo, exclude);
  const Rat delta = simplest_in(g, hi_eff, Parity::Odd, g);
  std::vector<Rat> turns = turns_below(a.turns, g);
  turns.push_back(g);
  Node out{std::move(turns), delta};
  if (!perp(out, a) || !(divergence(out, a) == std::optional<Rat>(g))) {
    throw std::logic_error("branch_off: postcondition check failed");
  }
  return out;
}

namespace {

// One step of the interpolation construction, on a U that is already an
// antichain whenever W is non-empty (guaranteed by the precondition check).
Node interpolant_impl(std::vector<Node> U, const std::vector<Node>& V,
                      const std::vector<Node>& W) {
  // Maximal elements of U; pairwise incomparable by maximality.
  std::vector<Node> maximals;
  for (const Node& u : U) {
    bool is_max = true;
    for (const Node& other : U) {
      if (lt(u, other)) { is_max = false; break; }
    }
    if (is_max && std::find(maximals.begin(), maximals.end(), u) == maximals.end()) {
      maximals.push_back(u);
    }
  }
  std::sort(maximals.begin(), maximals.end(), NodeLess{});

  if (maximals.size() >= 3) {
    // Merge the deepest-splitting pair under a fresh stand-in point placed
    // below where every other maximal element branches away, then recurse.
    size_t bi = 0, bj = 1;
    Rat g_max = *divergence(maximals[0], maximals[1]);
    for (size_t i = 0; i < maximals.size(); ++i) {
      for (size_t j = i + 1; j < maximals.size(); ++j) {
        const Rat g = *divergence(maximals[i], maximals[j]);
        if (g > g_max) { g_max = g; bi = i; bj = j; }
      }
    }
    std::optional<Rat> g2;
    for (size_t k = 0; k < maximals.size(); ++k) {
      if (k == bi || k == bj) continue;
      const Rat g = *divergence(maximals[k], maximals[bi]);
      if (!g2 || g > *g2) g2 = g;
    }
    const Rat delta = simplest_in(*g2, g_max, Parity::Odd);
    const Node stand_in{turns_below(maximals[bi].turns, delta), delta};
    std::vector<Node> next;
    for (const Node& u : U) {
      if (u == maximals[bi] || u == maximals[bj]) continue;
      next.push_back(u);
    }
    next.push_back(stand_in);
    return interpolant_impl(std::move(next), V, W);
  }

  const Node& u0 = maximals[0];
  // Reference depth below which the result must sit: the depth of u0 for a
  // single maximal element, the splitting position for two.
  const Rat ceiling = maximals.size() == 1
                          ? u0.depth
                          : *divergence(maximals[0], maximals[1]);

  // Gather V and W (tagged), deduplicated by value.
  struct Tagged { Node node; bool in_V; };
  std::vector<Tagged> pool;
  auto add = [&pool](const Node& n, bool in_V) {
    for (const Tagged& t : pool) {
      if (t.node == n) return;
    }
    pool.push_back({n, in_V});
  };
  for (const Node& v : V) add(v, true);
  for (const Node& w : W) add(w, false);

  if (pool.empty()) {
    if (maximals.size() == 1) return above(u0);
    const Rat delta = simplest_in(ceiling - 1, ceiling, Parity::Odd);
    return Node{turns_below(u0.turns, delta), delta};
  }

  // p precedes q when p must end up below the result if q does: p < q, or
  // p perp q with U entirely below p, or q branches off the U-trunk above
  // where p does.
  auto precedes = [&U](const Node& p, const Node& q) {
    if (lt(p, q)) return true;
    if (perp(p, q)) {
      bool u_below_p = true;
      for (const Node& u : U) {
        if (!lt(u, p)) { u_below_p = false; break; }
      }
      if (u_below_p) return true;
    }
    for (const Node& u : U) {
      if (!rel_C(q, p, u)) return false;
    }
    return true;
  };

  const Tagged* m = nullptr;
  for (const Tagged& cand : pool) {
    bool minimal = true;
    for (const Tagged& other : pool) {
      if (other.node == cand.node) continue;
      if (precedes(other.node, cand.node)) { minimal = false; break; }
    }
    if (minimal && (m == nullptr || node_less(cand.node, m->node))) m = &cand;
  }
  if (m == nullptr) {
    throw std::logic_error("interpolant: no minimal constraint element; inconsistent input");
  }

  Rat floor_pos;
  if (m->in_V) {
    floor_pos = m->node.depth;
  } else {
    const auto dm = divergence(m->node, u0);
    if (!dm) {
      throw std::logic_error("interpolant: side constraint comparable to U");
    }
    floor_pos = *dm;
  }
  const Rat delta = simplest_in(floor_pos, ceiling, Parity::Odd);
  return Node{turns_below(u0.turns, delta), delta};
}

}  // namespace

Node interpolant(const std::vector<Node>& U, const std::vector<Node>& V,
                 const std::vector<Node>& W) {
  if (U.empty()) throw std::invalid_argument("interpolant: U is empty");
  for (const Node& u : U) {
    for (const Node& v : V) {
      if (!lt(u, v)) {
        throw std::invalid_argument("interpolant: precondition U < V violated at " +
                                    node_to_string(u) + " vs " + node_to_string(v));
      }
    }
  }
  for (const Node& w : W) {
    for (size_t i = 0; i < U.size(); ++i) {
      for (size_t j = 0; j < U.size(); ++j) {
        if (i == j || U[i] == U[j]) continue;
        if (!rel_C(w, U[i], U[j])) {
          throw std::invalid_argument(
              "interpolant: precondition C(w, u1 u2) violated at w=" +
              node_to_string(w) + ", u1=" + node_to_string(U[i]) +
              ", u2=" + node_to_string(U[j]));
        }
      }
    }
    if (U.size() == 1 && !perp(w, U[0])) {
      throw std::invalid_argument("interpolant: precondition w perp u violated at w=" +
                                  node_to_string(w));
    }
  }

  Node x = interpolant_impl(U, V, W);

  for (const Node& u : U) {
    if (!lt(u, x)) throw std::logic_error("interpolant: output not above U");
  }
  for (const Node& v : V) {
    if (!lt(x, v)) throw std::logic_error("interpolant: output not below V");
  }
  for (const Node& w : W) {
    if (!perp(x, w)) throw std::logic_error("interpolant: output comparable to W");
    for (const Node& u : U) {
      if (divergence(x, w) != divergence(u, w)) {
        throw std::logic_error("interpolant: output divergence profile mismatch");
      }
    }
  }
  return x;
}

}  // namespace semitree
