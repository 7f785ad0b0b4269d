#include "semitree/engine.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <variant>

#include "semitree/grid.hpp"
#include "semitree/witness.hpp"

namespace semitree {

namespace {

enum RelKind : int { kPLt = 0, kPGt = 1, kPPerp = 2 };

// Required quantifier-free type of a new point over the already placed ones.
struct NewPointSpec {
  std::vector<int> rel;                      // relation of p to placed i
  std::vector<std::vector<char>> c_new_ij;   // C(p, i, j)
  std::vector<std::vector<char>> c_i_new_j;  // C(i, p, j)
};

NewPointSpec make_spec(int m) {
  NewPointSpec spec;
  spec.rel.assign(m, kPPerp);
  spec.c_new_ij.assign(m, std::vector<char>(m, 0));
  spec.c_i_new_j.assign(m, std::vector<char>(m, 0));
  return spec;
}

std::vector<Rat> turns_below(const Node& a, const Rat& cut) {
  std::vector<Rat> out;
  for (const Rat& t : a.turns) {
    if (t < cut) out.push_back(t);
  }
  return out;
}

std::optional<std::string> type_mismatch(const Node& q,
                                         const std::vector<Node>& images,
                                         const NewPointSpec& spec) {
  const int m = static_cast<int>(images.size());
  for (int i = 0; i < m; ++i) {
    int got;
    if (q == images[i]) {
      return "the constructed point coincides with image " + std::to_string(i);
    }
    if (lt(q, images[i])) {
      got = kPLt;
    } else if (lt(images[i], q)) {
      got = kPGt;
    } else {
      got = kPPerp;
    }
    if (got != spec.rel[i]) {
      return "relation to point " + std::to_string(i) + " cannot be realized";
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (rel_C(q, images[i], images[j]) != static_cast<bool>(spec.c_new_ij[i][j])) {
        return "C(new, " + std::to_string(i) + " " + std::to_string(j) +
               ") cannot be realized";
      }
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (j == i) continue;
      if (rel_C(images[i], q, images[j]) != static_cast<bool>(spec.c_i_new_j[i][j])) {
        return "C(" + std::to_string(i) + ", new " + std::to_string(j) +
               ") cannot be realized";
      }
    }
  }
  return std::nullopt;
}

// Direct construction mirroring the one-point extension argument: a point
// with something below it is an interpolant over the maximal lower images;
// otherwise it either continues the chain below its least upper image or
// branches off next to an anchor among the incomparable images. Covers the
// common configurations; place_new_point falls back to a grid scan when the
// construction does not apply (e.g. incomparable images stacked in a chain).
std::variant<Node, std::string> place_direct(const std::vector<Node>& images,
                                             const NewPointSpec& spec) {
  const int m = static_cast<int>(images.size());
  std::vector<int> above, below_idx, side;
  for (int i = 0; i < m; ++i) {
    if (spec.rel[i] == kPLt) {
      above.push_back(i);
    } else if (spec.rel[i] == kPGt) {
      below_idx.push_back(i);
    } else {
      side.push_back(i);
    }
  }

  auto finish = [&](const Node& q) -> std::variant<Node, std::string> {
    if (auto why = type_mismatch(q, images, spec)) return *why;
    return q;
  };

  if (!below_idx.empty()) {
    std::vector<Node> u, v, w;
    for (int i : below_idx) {
      bool maximal = true;
      for (int j : below_idx) {
        if (j != i && lt(images[i], images[j])) maximal = false;
      }
      if (maximal) u.push_back(images[i]);
    }
    for (int i : above) v.push_back(images[i]);
    for (int i : side) w.push_back(images[i]);
    try {
      return finish(interpolant(u, v, w));
    } catch (const std::invalid_argument& e) {
      return std::string("no interpolant exists: ") + e.what();
    }
  }

  for (size_t i = 0; i < above.size(); ++i) {
    for (size_t j = i + 1; j < above.size(); ++j) {
      if (perp(images[above[i]], images[above[j]])) {
        return "the points above the new point are not a chain";
      }
    }
  }
  if (above.empty() && side.empty()) return finish(Node{{}, Rat(0)});

  int v_min = -1;
  for (int i : above) {
    if (v_min == -1 || lt(images[i], images[v_min])) v_min = i;
  }

  bool plain_continuation = side.empty();
  if (!side.empty() && v_min != -1) {
    plain_continuation = true;
    for (int wi : side) {
      if (!perp(images[wi], images[v_min])) plain_continuation = false;
    }
  }
  if (!side.empty() && v_min == -1) plain_continuation = false;

  if (plain_continuation) return finish(below(images[v_min]));

  // Anchor selection: a side point lying under every upper image, forming a
  // C-pattern with each remaining side point.
  int w0 = -1;
  for (int cand : side) {
    bool under_all = true;
    for (int ai : above) {
      if (!lt(images[cand], images[ai])) under_all = false;
    }
    if (!under_all) continue;
    bool valid = true;
    for (int other : side) {
      if (other == cand) continue;
      const bool c_new = spec.c_new_ij[std::min(cand, other)][std::max(cand, other)];
      if (!spec.c_i_new_j[other][cand] && !c_new) valid = false;
    }
    if (valid) {
      w0 = cand;
      break;
    }
  }
  if (w0 == -1) {
    return "no admissible anchor among the incomparable points";
  }

  std::vector<int> cluster;
  for (int wi : side) {
    if (wi == w0 || spec.c_new_ij[std::min(wi, w0)][std::max(wi, w0)]) {
      cluster.push_back(wi);
    }
  }
  std::vector<Node> u, v, w;
  for (int ci : cluster) {
    bool maximal = true;
    for (int cj : cluster) {
      if (cj != ci && lt(images[ci], images[cj])) maximal = false;
    }
    if (maximal) u.push_back(images[ci]);
  }
  for (int ai : above) v.push_back(images[ai]);
  for (int wi : side) {
    if (std::find(cluster.begin(), cluster.end(), wi) == cluster.end()) {
      w.push_back(images[wi]);
    }
  }

  try {
    Node x = interpolant(u, v, w);
    std::vector<Node> v_ext = v;
    v_ext.push_back(x);
    Node xp = interpolant(u, v_ext, w);
    std::set<Rat> blocked(xp.turns.begin(), xp.turns.end());
    Rat g = simplest_in(x.depth, xp.depth, Parity::Even, std::nullopt, blocked);
    Rat d = simplest_in(g, xp.depth, Parity::Odd);
    std::vector<Rat> turns = turns_below(xp, g);
    turns.push_back(g);
    return finish(Node{std::move(turns), d});
  } catch (const std::invalid_argument& e) {
    return std::string("no interpolant exists: ") + e.what();
  }
}

// Finds a node realizing the requested type over the placed images, or
// explains why none exists. The candidate grid holds one node per realizable
// one-point type over the images, so an unsuccessful scan is conclusive; the
// analytic explanation is kept because it names the obstruction.
std::variant<Node, std::string> place_new_point(const std::vector<Node>& images,
                                                const NewPointSpec& spec) {
  auto direct = place_direct(images, spec);
  if (std::holds_alternative<Node>(direct)) return direct;
  for (const Node& q : witness_grid(images)) {
    if (!type_mismatch(q, images, spec)) return q;
  }
  return direct;
}

}  // namespace

void validate_partial_iso(const PartialIso& rho) {
  if (rho.domain.size() != rho.range.size()) {
    throw std::invalid_argument("partial isomorphism: domain and range sizes differ");
  }
  const int m = static_cast<int>(rho.domain.size());
  for (int i = 0; i < m; ++i) {
    validate_node(rho.domain[i]);
    validate_node(rho.range[i]);
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (rho.domain[i] == rho.domain[j]) {
        throw std::invalid_argument("partial isomorphism: domain points " +
                                    std::to_string(i) + " and " + std::to_string(j) +
                                    " coincide");
      }
      if (rho.range[i] == rho.range[j]) {
        throw std::invalid_argument("partial isomorphism: range points " +
                                    std::to_string(i) + " and " + std::to_string(j) +
                                    " coincide");
      }
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (leq(rho.domain[i], rho.domain[j]) != leq(rho.range[i], rho.range[j])) {
        throw std::invalid_argument("partial isomorphism: pair (" + std::to_string(i) +
                                    "," + std::to_string(j) +
                                    ") violates order preservation");
      }
    }
  }
  for (int z = 0; z < m; ++z) {
    for (int x = 0; x < m; ++x) {
      for (int y = x + 1; y < m; ++y) {
        if (z == x || z == y) continue;
        if (rel_C(rho.domain[z], rho.domain[x], rho.domain[y]) !=
            rel_C(rho.range[z], rho.range[x], rho.range[y])) {
          throw std::invalid_argument("partial isomorphism: triple (" +
                                      std::to_string(z) + "," + std::to_string(x) +
                                      "," + std::to_string(y) +
                                      ") violates C preservation");
        }
      }
    }
  }
}

PartialIso extend_partial_iso(const PartialIso& rho, const Node& p) {
  validate_partial_iso(rho);
  validate_node(p);
  const int m = static_cast<int>(rho.domain.size());
  for (int i = 0; i < m; ++i) {
    if (rho.domain[i] == p) {
      throw std::invalid_argument("extend_partial_iso: the point is already mapped");
    }
  }

  NewPointSpec spec = make_spec(m);
  for (int i = 0; i < m; ++i) {
    if (lt(p, rho.domain[i])) {
      spec.rel[i] = kPLt;
    } else if (lt(rho.domain[i], p)) {
      spec.rel[i] = kPGt;
    } else {
      spec.rel[i] = kPPerp;
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      spec.c_new_ij[i][j] = rel_C(p, rho.domain[i], rho.domain[j]);
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (j != i) spec.c_i_new_j[i][j] = rel_C(rho.domain[i], p, rho.domain[j]);
    }
  }

  auto placed = place_new_point(rho.range, spec);
  if (std::holds_alternative<std::string>(placed)) {
    throw std::logic_error("extend_partial_iso: extension failed unexpectedly: " +
                           std::get<std::string>(placed));
  }
  PartialIso out = rho;
  out.domain.push_back(p);
  out.range.push_back(std::get<Node>(placed));
  return out;
}

EmbedResult embed_structure(const FiniteStructure& a) {
  validate(a);  // surfaces dimension errors; law violations are handled below
  EmbedResult result;
  const int n = a.n;
  std::vector<Node> images(n);
  std::vector<int> placed;  // original indices in placement order
  std::vector<char> done(n, 0);

  for (int step = 0; step < n; ++step) {
    int next = -1;
    for (int i = 0; i < n && next == -1; ++i) {
      if (done[i]) continue;
      bool maximal = true;
      for (int j = 0; j < n; ++j) {
        if (!done[j] && a.lt_at(i, j)) maximal = false;
      }
      if (maximal) next = i;
    }
    if (next == -1) {
      int witness = 0;
      while (done[witness]) ++witness;
      result.rejection = AgeRejection{
          witness, "the order table contains a cycle among the remaining points"};
      return result;
    }

    const int m = static_cast<int>(placed.size());
    NewPointSpec spec = make_spec(m);
    std::vector<Node> current;
    for (int k = 0; k < m; ++k) current.push_back(images[placed[k]]);
    bool bad_pair = false;
    for (int k = 0; k < m && !bad_pair; ++k) {
      const int i = placed[k];
      if (a.leq[next][i] && a.leq[i][next]) {
        result.rejection =
            AgeRejection{next, "point is order-equivalent to point " + std::to_string(i)};
        bad_pair = true;
      } else if (a.lt_at(next, i)) {
        spec.rel[k] = kPLt;
      } else if (a.lt_at(i, next)) {
        spec.rel[k] = kPGt;
      } else {
        spec.rel[k] = kPPerp;
      }
    }
    if (bad_pair) return result;
    for (int k = 0; k < m; ++k) {
      for (int l = k + 1; l < m; ++l) {
        spec.c_new_ij[k][l] = a.has_C(next, placed[k], placed[l]);
      }
    }
    for (int k = 0; k < m; ++k) {
      for (int l = 0; l < m; ++l) {
        if (l != k) spec.c_i_new_j[k][l] = a.has_C(placed[k], next, placed[l]);
      }
    }

    auto outcome = place_new_point(current, spec);
    if (std::holds_alternative<std::string>(outcome)) {
      result.rejection = AgeRejection{next, std::get<std::string>(outcome)};
      return result;
    }
    images[next] = std::get<Node>(outcome);
    placed.push_back(next);
    done[next] = 1;
  }

  // Full confirmation that the realization matches the tables exactly.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (a.leq[i][j] != leq(images[i], images[j])) {
        result.rejection = AgeRejection{j, "final check: order table mismatch at (" +
                                               std::to_string(i) + "," +
                                               std::to_string(j) + ")"};
        return result;
      }
    }
  }
  for (int z = 0; z < n; ++z) {
    for (int x = 0; x < n; ++x) {
      for (int y = x + 1; y < n; ++y) {
        if (z == x || z == y) continue;
        if (a.has_C(z, x, y) != rel_C(images[z], images[x], images[y])) {
          result.rejection = AgeRejection{z, "final check: C mismatch at (" +
                                                 std::to_string(z) + "," +
                                                 std::to_string(x) + "," +
                                                 std::to_string(y) + ")"};
          return result;
        }
      }
    }
  }
  result.nodes = std::move(images);
  return result;
}

PartialIso homogeneity_extend(const std::vector<Node>& a, const std::vector<Node>& b,
                              const std::vector<std::pair<int, int>>& iso,
                              const std::vector<Node>& extra) {
  PartialIso rho;
  std::vector<char> in_domain(a.size(), 0);
  for (const auto& [i, j] : iso) {
    if (i < 0 || i >= static_cast<int>(a.size()) || j < 0 ||
        j >= static_cast<int>(b.size())) {
      throw std::invalid_argument("homogeneity_extend: pair index out of range");
    }
    if (in_domain[i]) {
      throw std::invalid_argument("homogeneity_extend: point " + std::to_string(i) +
                                  " is mapped twice");
    }
    in_domain[i] = 1;
    rho.domain.push_back(a[i]);
    rho.range.push_back(b[j]);
  }
  validate_partial_iso(rho);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!in_domain[i]) rho = extend_partial_iso(rho, a[i]);
  }
  for (const Node& e : extra) rho = extend_partial_iso(rho, e);
  return rho;
}

}  // namespace semitree
