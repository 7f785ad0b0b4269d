#include "semitree/enumeration.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "semitree/grid.hpp"

namespace semitree {

namespace {

std::vector<LabeledStructure> next_level(const std::vector<LabeledStructure>& prev) {
  std::vector<LabeledStructure> out;
  std::map<std::string, size_t> seen;
  for (const LabeledStructure& ls : prev) {
    const int n = ls.structure.n;
    for (const Node& cand : witness_grid(ls.realization)) {
      bool duplicate = false;
      for (const Node& e : ls.realization) {
        if (e == cand) duplicate = true;
      }
      if (duplicate) continue;

      LabeledStructure ext;
      ext.structure = ls.structure;
      ext.structure.n = n + 1;
      for (auto& row : ext.structure.leq) row.push_back(false);
      ext.structure.leq.emplace_back(n + 1, false);
      ext.structure.leq[n][n] = true;
      for (int i = 0; i < n; ++i) {
        ext.structure.leq[n][i] = leq(cand, ls.realization[i]);
        ext.structure.leq[i][n] = leq(ls.realization[i], cand);
      }
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          if (rel_C(cand, ls.realization[i], ls.realization[j])) {
            ext.structure.add_C(n, i, j);
          }
        }
        for (int j = 0; j < n; ++j) {
          if (j == i) continue;
          if (rel_C(ls.realization[i], cand, ls.realization[j])) {
            ext.structure.add_C(i, n, j);
          }
        }
      }
      ext.realization = ls.realization;
      ext.realization.push_back(cand);

      std::string key = ext.structure.labeled_key();
      if (seen.emplace(std::move(key), out.size()).second) {
        out.push_back(std::move(ext));
      }
    }
  }
  return out;
}

}  // namespace

const std::vector<LabeledStructure>& enumerate_labeled_age_structures(int n, int bound) {
  if (n < 0) throw std::invalid_argument("enumeration size must be nonnegative");
  if (n > bound) {
    throw std::invalid_argument("enumeration size " + std::to_string(n) +
                                " exceeds the bound " + std::to_string(bound));
  }
  static std::mutex mu;
  static std::vector<std::vector<LabeledStructure>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (cache.empty()) {
    cache.push_back({LabeledStructure{FiniteStructure{0, {}, {}}, {}}});
    cache.push_back(
        {LabeledStructure{FiniteStructure{1, {{true}}, {}}, {Node{{}, Rat(0)}}}});
  }
  while (static_cast<int>(cache.size()) <= n) {
    cache.push_back(next_level(cache.back()));
  }
  return cache[n];
}

std::vector<FiniteStructure> enumerate_age_structures(int n, int bound) {
  const auto& labeled = enumerate_labeled_age_structures(n, bound);

  // The dedupe pass canonicalizes every labeled structure (n! relabelings
  // each); cache the result since solvers call this per instance.
  static std::mutex mu;
  static std::map<int, std::vector<FiniteStructure>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto hit = cache.find(n);
  if (hit != cache.end()) return hit->second;

  std::map<std::string, FiniteStructure> classes;
  for (const LabeledStructure& ls : labeled) {
    std::string key = ls.structure.canonical_key();
    auto it = classes.find(key);
    if (it == classes.end()) {
      classes.emplace(std::move(key), ls.structure);
    } else if (ls.structure.labeled_key() < it->second.labeled_key()) {
      it->second = ls.structure;
    }
  }
  std::vector<FiniteStructure> out;
  out.reserve(classes.size());
  for (auto& [key, s] : classes) out.push_back(std::move(s));
  std::sort(out.begin(), out.end(), [](const FiniteStructure& a, const FiniteStructure& b) {
    return a.labeled_key() < b.labeled_key();
  });
  return cache.emplace(n, std::move(out)).first->second;
}

}  // namespace semitree
