#include "semitree/structure.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "semitree/engine.hpp"

namespace semitree {

namespace {

std::array<int, 3> normalize_triple(int z, int x, int y) {
  return {z, std::min(x, y), std::max(x, y)};
}

}  // namespace

bool FiniteStructure::has_C(int z, int x, int y) const {
  if (z == x || z == y || x == y) return false;
  return c_triples.count(normalize_triple(z, x, y)) > 0;
}

void FiniteStructure::add_C(int z, int x, int y) {
  if (z < 0 || z >= n || x < 0 || x >= n || y < 0 || y >= n) {
    throw std::invalid_argument("add_C: point index out of range");
  }
  if (z == x || z == y || x == y) {
    throw std::invalid_argument("add_C: the three points must be distinct");
  }
  c_triples.insert(normalize_triple(z, x, y));
}

std::string FiniteStructure::labeled_key() const {
  std::string key = "n=" + std::to_string(n) + ";";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) key += leq[i][j] ? '1' : '0';
  }
  key += ";";
  for (const auto& t : c_triples) {
    key += std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
           std::to_string(t[2]) + "|";
  }
  return key;
}

std::string FiniteStructure::canonical_key() const {
  // Counting convention: the order table is canonicalized over all
  // relabelings, and the C triples are read through the first relabeling
  // (in lexicographic permutation order) that attains the canonical table.
  std::vector<int> perm(n), inv(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best_bits;
  std::vector<int> best_perm(perm);
  do {
    for (int i = 0; i < n; ++i) inv[perm[i]] = i;
    std::string bits;
    bits.reserve(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) bits += leq[inv[a]][inv[b]] ? '1' : '0';
    }
    if (best_bits.empty() || bits < best_bits) {
      best_bits = std::move(bits);
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<std::array<int, 3>> mapped;
  for (const auto& t : c_triples) {
    mapped.push_back(normalize_triple(best_perm[t[0]], best_perm[t[1]], best_perm[t[2]]));
  }
  std::sort(mapped.begin(), mapped.end());
  std::string key = "n=" + std::to_string(n) + ";" + best_bits + ";";
  for (const auto& t : mapped) {
    key += std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
           std::to_string(t[2]) + "|";
  }
  return key;
}

std::vector<std::string> validate(const FiniteStructure& s) {
  if (s.n < 0) throw std::invalid_argument("structure size must be nonnegative");
  if (static_cast<int>(s.leq.size()) != s.n) {
    throw std::invalid_argument("leq table has " + std::to_string(s.leq.size()) +
                                " rows, expected " + std::to_string(s.n));
  }
  for (int i = 0; i < s.n; ++i) {
    if (static_cast<int>(s.leq[i].size()) != s.n) {
      throw std::invalid_argument("leq table row " + std::to_string(i) +
                                  " has wrong length");
    }
  }
  for (const auto& t : s.c_triples) {
    for (int v : t) {
      if (v < 0 || v >= s.n) {
        throw std::invalid_argument("C triple index out of range");
      }
    }
    if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2]) {
      throw std::invalid_argument("C triple must have three distinct points");
    }
  }

  std::vector<std::string> violations;
  auto idx = [](int i) { return std::to_string(i); };
  for (int i = 0; i < s.n; ++i) {
    if (!s.leq[i][i]) violations.push_back("not reflexive at " + idx(i));
  }
  for (int i = 0; i < s.n; ++i) {
    for (int j = 0; j < s.n; ++j) {
      if (i != j && s.leq[i][j] && s.leq[j][i]) {
        violations.push_back("antisymmetry fails at (" + idx(i) + "," + idx(j) + ")");
      }
    }
  }
  for (int i = 0; i < s.n; ++i) {
    for (int j = 0; j < s.n; ++j) {
      for (int k = 0; k < s.n; ++k) {
        if (s.leq[i][j] && s.leq[j][k] && !s.leq[i][k]) {
          violations.push_back("transitivity fails at (" + idx(i) + "," + idx(j) +
                               "," + idx(k) + ")");
        }
      }
    }
  }
  for (int i = 0; i < s.n; ++i) {
    for (int j = 0; j < s.n; ++j) {
      for (int k = j + 1; k < s.n; ++k) {
        if (j == i || k == i) continue;
        if (s.leq[i][j] && s.leq[i][k] && s.perp_at(j, k)) {
          violations.push_back("points above " + idx(i) + " are not a chain: (" +
                               idx(j) + "," + idx(k) + ")");
        }
      }
    }
  }
  for (const auto& t : s.c_triples) {
    if (!s.perp_at(t[0], t[1]) || !s.perp_at(t[0], t[2]) || !s.perp_at(t[1], t[2])) {
      violations.push_back("C(" + idx(t[0]) + "," + idx(t[1]) + "," + idx(t[2]) +
                           ") requires pairwise incomparable points");
    }
  }
  return violations;
}

FiniteStructure induced_structure(const std::vector<Node>& points) {
  const int n = static_cast<int>(points.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (points[i] == points[j]) {
        throw std::invalid_argument("induced_structure: points " + std::to_string(i) +
                                    " and " + std::to_string(j) + " coincide");
      }
    }
  }
  FiniteStructure s;
  s.n = n;
  s.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) s.leq[i][j] = leq(points[i], points[j]);
  }
  for (int z = 0; z < n; ++z) {
    for (int x = 0; x < n; ++x) {
      for (int y = x + 1; y < n; ++y) {
        if (z == x || z == y) continue;
        if (rel_C(points[z], points[x], points[y])) s.add_C(z, x, y);
      }
    }
  }
  return s;
}

std::vector<std::vector<int>> find_isomorphisms(const FiniteStructure& a,
                                                const FiniteStructure& b) {
  std::vector<std::vector<int>> result;
  if (a.n != b.n) return result;
  const int n = a.n;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      for (int j = 0; j < n && ok; ++j) {
        if (a.leq[i][j] != b.leq[perm[i]][perm[j]]) ok = false;
      }
    }
    for (int z = 0; z < n && ok; ++z) {
      for (int x = 0; x < n && ok; ++x) {
        for (int y = x + 1; y < n && ok; ++y) {
          if (z == x || z == y) continue;
          if (a.has_C(z, x, y) != b.has_C(perm[z], perm[x], perm[y])) ok = false;
        }
      }
    }
    if (ok) result.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return result;
}

bool convex_order_ok(const FiniteStructure& s, const std::vector<int>& order) {
  const int n = s.n;
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<int> pos(n, -1);
  for (int p = 0; p < n; ++p) {
    if (order[p] < 0 || order[p] >= n || pos[order[p]] != -1) return false;
    pos[order[p]] = p;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (s.lt_at(i, j) && pos[i] > pos[j]) return false;
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!s.lt_at(a, b)) continue;
      for (int c = 0; c < n; ++c) {
        if (c == a || c == b || !s.perp_at(b, c)) continue;
        if (pos[a] < pos[c] && pos[c] < pos[b]) return false;
      }
    }
  }
  for (const auto& t : s.c_triples) {
    const int x = t[0], y = t[1], z = t[2];
    const bool before = pos[x] < pos[y] && pos[x] < pos[z];
    const bool after = pos[y] < pos[x] && pos[z] < pos[x];
    if (!before && !after) return false;
  }
  return true;
}

namespace {

void append_products(const std::vector<std::vector<std::vector<int>>>& blocks,
                     size_t at, std::vector<int>& prefix,
                     std::vector<std::vector<int>>& out) {
  if (at == blocks.size()) {
    out.push_back(prefix);
    return;
  }
  for (const auto& seq : blocks[at]) {
    const size_t mark = prefix.size();
    prefix.insert(prefix.end(), seq.begin(), seq.end());
    append_products(blocks, at + 1, prefix, out);
    prefix.resize(mark);
  }
}

// All layerings of the subtree rooted at r: each child block is contiguous,
// child blocks come in every order, and r is placed last.
std::vector<std::vector<int>> subtree_layerings(const FiniteStructure& s,
                                                const std::vector<int>& members,
                                                int r) {
  std::vector<int> children;
  for (int x : members) {
    if (x == r || !s.lt_at(x, r)) continue;
    bool maximal = true;
    for (int y : members) {
      if (y != r && y != x && s.lt_at(x, y) && s.lt_at(y, r)) maximal = false;
    }
    if (maximal) children.push_back(x);
  }
  if (children.empty()) return {{r}};

  std::vector<std::vector<std::vector<int>>> child_seqs;
  for (int c : children) {
    std::vector<int> sub;
    for (int x : members) {
      if (s.leq_at(x, c)) sub.push_back(x);
    }
    child_seqs.push_back(subtree_layerings(s, sub, c));
  }

  std::vector<std::vector<int>> result;
  std::vector<int> index(children.size());
  std::iota(index.begin(), index.end(), 0);
  do {
    std::vector<std::vector<std::vector<int>>> arranged;
    for (int k : index) arranged.push_back(child_seqs[k]);
    std::vector<int> prefix;
    std::vector<std::vector<int>> combos;
    append_products(arranged, 0, prefix, combos);
    for (auto& seq : combos) {
      seq.push_back(r);
      result.push_back(std::move(seq));
    }
  } while (std::next_permutation(index.begin(), index.end()));
  return result;
}

}  // namespace

std::vector<std::vector<int>> convex_extensions(const FiniteStructure& s) {
  auto structural = validate(s);
  if (!structural.empty()) {
    throw std::invalid_argument("convex_extensions: " + structural.front());
  }
  EmbedResult emb = embed_structure(s);
  if (!emb.ok()) {
    throw std::invalid_argument(
        "convex_extensions: structure does not embed into the tree order (" +
        emb.rejection->reason + ")");
  }

  std::vector<int> roots;
  for (int i = 0; i < s.n; ++i) {
    bool maximal = true;
    for (int j = 0; j < s.n; ++j) {
      if (s.lt_at(i, j)) maximal = false;
    }
    if (maximal) roots.push_back(i);
  }

  std::vector<std::vector<std::vector<int>>> tree_seqs;
  for (int r : roots) {
    std::vector<int> members;
    for (int x = 0; x < s.n; ++x) {
      if (s.leq_at(x, r)) members.push_back(x);
    }
    tree_seqs.push_back(subtree_layerings(s, members, r));
  }

  std::vector<std::vector<int>> candidates;
  if (s.n == 0) {
    candidates.push_back({});
  } else {
    std::vector<int> index(roots.size());
    std::iota(index.begin(), index.end(), 0);
    do {
      std::vector<std::vector<std::vector<int>>> arranged;
      for (int k : index) arranged.push_back(tree_seqs[k]);
      std::vector<int> prefix;
      append_products(arranged, 0, prefix, candidates);
    } while (std::next_permutation(index.begin(), index.end()));
  }

  std::vector<std::vector<int>> result;
  for (auto& order : candidates) {
    if (convex_order_ok(s, order)) result.push_back(std::move(order));
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

nlohmann::json structure_to_json(const FiniteStructure& s) {
  nlohmann::json j;
  j["n"] = s.n;
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < s.n; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int k = 0; k < s.n; ++k) row.push_back(s.leq[i][k] ? 1 : 0);
    rows.push_back(std::move(row));
  }
  j["leq"] = std::move(rows);
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& t : s.c_triples) cs.push_back({t[0], t[1], t[2]});
  j["C"] = std::move(cs);
  return j;
}

FiniteStructure structure_from_json(const nlohmann::json& j) {
  FiniteStructure s;
  if (!j.is_object() || !j.contains("n") || !j.contains("leq")) {
    throw std::invalid_argument("structure JSON needs fields \"n\" and \"leq\"");
  }
  s.n = j.at("n").get<int>();
  if (s.n < 0) throw std::invalid_argument("structure size must be nonnegative");
  const auto& rows = j.at("leq");
  if (!rows.is_array() || static_cast<int>(rows.size()) != s.n) {
    throw std::invalid_argument("leq table has wrong number of rows");
  }
  s.leq.assign(s.n, std::vector<bool>(s.n, false));
  for (int i = 0; i < s.n; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || static_cast<int>(row.size()) != s.n) {
      throw std::invalid_argument("leq table row " + std::to_string(i) +
                                  " has wrong length");
    }
    for (int k = 0; k < s.n; ++k) {
      const auto& cell = row[k];
      if (cell.is_boolean()) {
        s.leq[i][k] = cell.get<bool>();
      } else if (cell.is_number_integer()) {
        s.leq[i][k] = cell.get<int>() != 0;
      } else {
        throw std::invalid_argument("leq entries must be 0/1 or booleans");
      }
    }
  }
  if (j.contains("C")) {
    for (const auto& t : j.at("C")) {
      if (!t.is_array() || t.size() != 3) {
        throw std::invalid_argument("C entries must be triples [z,x,y]");
      }
      int z = t[0].get<int>(), x = t[1].get<int>(), y = t[2].get<int>();
      for (int v : {z, x, y}) {
        if (v < 0 || v >= s.n) throw std::invalid_argument("C triple index out of range");
      }
      if (z == x || z == y || x == y) {
        throw std::invalid_argument("C triple must have three distinct points");
      }
      s.add_C(z, x, y);
    }
  }
  return s;
}

}  // namespace semitree
