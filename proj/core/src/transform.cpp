#include "semitree/transform.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "semitree/engine.hpp"
#include "semitree/structure.hpp"
#include "semitree/witness.hpp"

namespace semitree {

namespace {

Rat make_rat(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

void require_distinct(const std::vector<Node>& points, const char* who) {
  for (size_t i = 0; i < points.size(); ++i) {
    validate_node(points[i]);
    for (size_t j = i + 1; j < points.size(); ++j) {
      if (points[i] == points[j]) {
        throw std::invalid_argument(std::string(who) + ": points " + std::to_string(i) +
                                    " and " + std::to_string(j) + " coincide");
      }
    }
  }
}

// The four constraints of a rearrangement around the chain S: S flips, the
// complement keeps its pattern, and comparability/incomparability across the
// boundary swap. Images must also stay pairwise distinct.
bool rearrangement_pattern_holds(const MappedSet& m, const std::vector<char>& in_s) {
  const size_t n = m.source.size();
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      if (m.image[i] == m.image[j]) return false;
      const Node &x = m.source[i], &y = m.source[j];
      const Node &fx = m.image[i], &fy = m.image[j];
      if (in_s[i] && in_s[j]) {
        if (lt(x, y) != lt(fy, fx)) return false;
      } else if (!in_s[i] && !in_s[j]) {
        if (lt(x, y) != lt(fx, fy)) return false;
        if (perp(x, y) != perp(fx, fy)) return false;
      } else if (!in_s[i] && in_s[j]) {
        if (lt(y, x)) return false;  // S would not be upward closed
        if (lt(x, y) && !perp(fx, fy)) return false;
        if (perp(x, y) && !lt(fx, fy)) return false;
      }
    }
  }
  return true;
}

}  // namespace

MappedSet reroot(const std::vector<Node>& points, const RerootSpec& spec) {
  require_distinct(points, "reroot");
  if (spec.pivot.has_value() == spec.chain.has_value()) {
    throw std::invalid_argument("reroot: exactly one of pivot or chain must be given");
  }

  const int n = static_cast<int>(points.size());
  std::vector<int> s_idx;
  if (spec.pivot) {
    validate_node(*spec.pivot);
    for (int i = 0; i < n; ++i) {
      if (leq(*spec.pivot, points[i])) s_idx.push_back(i);
    }
  } else {
    for (const Node& c : *spec.chain) {
      validate_node(c);
      int found = -1;
      for (int i = 0; i < n; ++i) {
        if (points[i] == c) found = i;
      }
      if (found == -1) {
        throw std::invalid_argument("reroot: chain point " + node_to_string(c) +
                                    " is not in the set");
      }
      if (std::find(s_idx.begin(), s_idx.end(), found) == s_idx.end()) {
        s_idx.push_back(found);
      }
    }
    for (size_t a = 0; a < s_idx.size(); ++a) {
      for (size_t b = a + 1; b < s_idx.size(); ++b) {
        if (perp(points[s_idx[a]], points[s_idx[b]])) {
          throw std::invalid_argument("reroot: the given chain is not a chain");
        }
      }
    }
    for (int si : s_idx) {
      for (int i = 0; i < n; ++i) {
        if (leq(points[si], points[i]) &&
            std::find(s_idx.begin(), s_idx.end(), i) == s_idx.end()) {
          throw std::invalid_argument(
              "reroot: the given chain is not upward closed within the set");
        }
      }
    }
  }

  MappedSet out;
  out.source = points;
  out.image = points;
  if (s_idx.empty()) return out;  // nothing to rearrange

  // Ascending chain y_0 < y_1 < ... (deepest first).
  std::sort(s_idx.begin(), s_idx.end(),
            [&](int a, int b) { return lt(points[a], points[b]); });
  const int m = static_cast<int>(s_idx.size());
  std::vector<char> in_s(n, 0);
  for (int si : s_idx) in_s[si] = 1;
  for (int k = 0; k < m; ++k) {
    out.image[s_idx[k]] = Node{{}, Rat(k + 1)};
  }

  // Bucket index of an off-chain point: the last chain point it is
  // incomparable to (0 when it lies below the whole chain).
  std::map<int, std::vector<int>> buckets;
  for (int i = 0; i < n; ++i) {
    if (in_s[i]) continue;
    int bucket = 0;
    for (int k = 0; k < m; ++k) {
      if (perp(points[i], points[s_idx[k]])) bucket = k + 1;
    }
    buckets[bucket].push_back(i);
  }

  for (const auto& [bucket, members] : buckets) {
    Node region_root{{make_rat(2 * bucket + 1, 2)}, make_rat(3 * bucket + 2, 3)};
    Rat lowest = points[members.front()].depth;
    for (int i : members) {
      Rat first = points[i].turns.empty() ? points[i].depth : points[i].turns.front();
      if (first < lowest) lowest = first;
    }
    Node top{{}, simplest_in(lowest - 1, lowest, Parity::Odd)};
    PartialIso rho;
    rho.domain.push_back(top);
    rho.range.push_back(region_root);
    for (int i : members) rho = extend_partial_iso(rho, points[i]);
    for (size_t k = 0; k < members.size(); ++k) {
      out.image[members[k]] = rho.range[k + 1];
    }
  }

  if (!rearrangement_pattern_holds(out, in_s)) {
    throw std::logic_error("reroot: construction violates the rearrangement pattern");
  }
  return out;
}

PreservationResult verify_preserves(const MappedSet& mapped, RelationName rel) {
  if (mapped.source.size() != mapped.image.size()) {
    throw std::invalid_argument("verify_preserves: source and image sizes differ");
  }
  const int arity = relation_arity(rel);
  const int n = static_cast<int>(mapped.source.size());
  PreservationResult result;
  if (n == 0) return result;

  std::vector<int> idx(arity, 0);
  while (true) {
    std::vector<Node> src, img;
    for (int a : idx) {
      src.push_back(mapped.source[a]);
      img.push_back(mapped.image[a]);
    }
    if (eval_relation(rel, src) != eval_relation(rel, img)) {
      result.preserved = false;
      result.counterexample = idx;
      return result;
    }
    int pos = arity - 1;
    while (pos >= 0 && idx[pos] == n - 1) {
      idx[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++idx[pos];
  }
  return result;
}

MappedSet flatten(const std::vector<Node>& points) {
  require_distinct(points, "flatten");
  const int n = static_cast<int>(points.size());

  // Target: an antichain whose C facts are the R facts of the source.
  FiniteStructure target;
  target.n = n;
  target.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) target.leq[i][i] = true;
  for (int c = 0; c < n; ++c) {
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (c == a || c == b) continue;
        if (rel_R(points[a], points[b], points[c])) target.add_C(c, a, b);
      }
    }
  }

  EmbedResult emb = embed_structure(target);
  if (!emb.ok()) {
    throw std::logic_error("flatten: the branching pattern is not realizable: " +
                           emb.rejection->reason);
  }

  MappedSet out;
  out.source = points;
  out.image = *emb.nodes;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!perp(out.image[i], out.image[j])) {
        throw std::logic_error("flatten: image is not an antichain");
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (a == b || b == c || a == c) continue;
        if (rel_R(points[a], points[b], points[c]) !=
            rel_C(out.image[c], out.image[a], out.image[b])) {
          throw std::logic_error("flatten: R/C correspondence fails at (" +
                                 std::to_string(a) + "," + std::to_string(b) + "," +
                                 std::to_string(c) + ")");
        }
      }
    }
  }
  return out;
}

MappedSet project_to_chain(const std::vector<Node>& points) {
  require_distinct(points, "project_to_chain");
  const int n = static_cast<int>(points.size());

  std::map<Rat, std::vector<int>> groups;
  for (int i = 0; i < n; ++i) groups[points[i].depth].push_back(i);
  std::vector<Rat> depths;
  for (const auto& [d, g] : groups) depths.push_back(d);

  MappedSet out;
  out.source = points;
  out.image.assign(n, Node{});
  for (size_t k = 0; k < depths.size(); ++k) {
    std::vector<int> members = groups[depths[k]];
    std::sort(members.begin(), members.end(),
              [&](int a, int b) { return node_less(points[a], points[b]); });
    const Rat bound = (k + 1 < depths.size()) ? depths[k + 1] : depths[k] + 1;
    Rat last = depths[k];
    for (size_t t = 0; t < members.size(); ++t) {
      if (t > 0) last = simplest_in(last, bound, Parity::Odd);
      out.image[members[t]] = Node{{}, last};
    }
  }

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (out.image[i] == out.image[j]) {
        throw std::logic_error("project_to_chain: image points collide");
      }
      if (lt(points[i], points[j]) && !lt(out.image[i], out.image[j])) {
        throw std::logic_error("project_to_chain: order not preserved at (" +
                               std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
  return out;
}

std::string map_class_to_string(MapClass c) {
  switch (c) {
    case MapClass::Flat:
      return "flat";
    case MapClass::Thin:
      return "thin";
    case MapClass::OrderPreserving:
      return "order-preserving";
    case MapClass::RerootingLike:
      return "rerooting-like";
    case MapClass::Other:
      return "other";
  }
  return "other";
}

MapClass classify_finite_map(const MappedSet& mapped) {
  if (mapped.source.size() != mapped.image.size()) {
    throw std::invalid_argument("classify_finite_map: source and image sizes differ");
  }
  const int n = static_cast<int>(mapped.source.size());

  bool all_perp = true, all_comparable = true;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!perp(mapped.image[i], mapped.image[j])) all_perp = false;
      if (perp(mapped.image[i], mapped.image[j])) all_comparable = false;
    }
  }
  if (all_perp) return MapClass::Flat;
  if (all_comparable) return MapClass::Thin;

  bool order_preserving = true;
  for (int i = 0; i < n && order_preserving; ++i) {
    for (int j = 0; j < n && order_preserving; ++j) {
      if (i == j) continue;
      if (leq(mapped.source[i], mapped.source[j]) !=
          leq(mapped.image[i], mapped.image[j])) {
        order_preserving = false;
      }
      if ((mapped.source[i] == mapped.source[j]) !=
          (mapped.image[i] == mapped.image[j])) {
        order_preserving = false;
      }
    }
  }
  if (order_preserving) return MapClass::OrderPreserving;

  std::set<std::vector<char>> candidates;
  for (int p = 0; p < n; ++p) {
    std::vector<char> in_s(n, 0);
    for (int i = 0; i < n; ++i) {
      if (leq(mapped.source[p], mapped.source[i])) in_s[i] = 1;
    }
    candidates.insert(std::move(in_s));
  }
  for (const auto& in_s : candidates) {
    if (rearrangement_pattern_holds(mapped, in_s)) return MapClass::RerootingLike;
  }
  return MapClass::Other;
}

std::optional<std::pair<int, int>> flip_pair(const std::vector<Node>& points) {
  require_distinct(points, "flip_pair");
  const int n = static_cast<int>(points.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!perp(points[i], points[j])) {
        throw std::invalid_argument("flip_pair: points " + std::to_string(i) + " and " +
                                    std::to_string(j) + " are comparable");
      }
    }
  }
  FiniteStructure s = induced_structure(points);
  for (const auto& sigma : find_isomorphisms(s, s)) {
    std::vector<int> moved;
    for (int i = 0; i < n; ++i) {
      if (sigma[i] != i) moved.push_back(i);
    }
    if (moved.size() == 2 && sigma[moved[0]] == moved[1]) {
      return std::make_pair(moved[0], moved[1]);
    }
  }
  return std::nullopt;
}

nlohmann::json mapped_set_to_json(const MappedSet& m) {
  nlohmann::json j;
  nlohmann::json src = nlohmann::json::array(), img = nlohmann::json::array();
  for (const Node& p : m.source) src.push_back(node_to_json(p));
  for (const Node& p : m.image) img.push_back(node_to_json(p));
  j["source"] = std::move(src);
  j["image"] = std::move(img);
  return j;
}

MappedSet mapped_set_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("source") || !j.contains("image")) {
    throw std::invalid_argument("mapped set JSON needs fields \"source\" and \"image\"");
  }
  MappedSet m;
  for (const auto& p : j.at("source")) m.source.push_back(node_from_json(p));
  for (const auto& p : j.at("image")) m.image.push_back(node_from_json(p));
  if (m.source.size() != m.image.size()) {
    throw std::invalid_argument("mapped set JSON: source and image sizes differ");
  }
  return m;
}

}  // namespace semitree
