#include "semitree/grid.hpp"

#include <algorithm>
#include <set>

#include "semitree/witness.hpp"

namespace semitree {

namespace {

std::vector<Rat> turns_below(const Node& a, const Rat& cut) {
  std::vector<Rat> out;
  for (const Rat& t : a.turns) {
    if (t < cut) out.push_back(t);
  }
  return out;
}

}  // namespace

std::string qf_type_signature(const Node& p, const std::vector<Node>& base) {
  std::string sig;
  const int n = static_cast<int>(base.size());
  for (int i = 0; i < n; ++i) {
    if (p == base[i]) {
      sig += 'e';
    } else if (lt(p, base[i])) {
      sig += 'l';
    } else if (lt(base[i], p)) {
      sig += 'g';
    } else {
      sig += 'p';
    }
  }
  sig += '|';
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      sig += rel_C(p, base[i], base[j]) ? '1' : '0';
    }
  }
  sig += '|';
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      sig += rel_C(base[i], p, base[j]) ? '1' : '0';
    }
  }
  return sig;
}

std::vector<Node> witness_grid(const std::vector<Node>& base) {
  std::vector<Node> candidates;
  if (base.empty()) {
    candidates.push_back(Node{{}, Rat(0)});
    return candidates;
  }

  for (const Node& a : base) {
    std::set<Rat> landmark_set;
    landmark_set.insert(a.depth);
    for (const Node& b : base) {
      if (b == a) continue;
      if (perp(a, b)) {
        landmark_set.insert(*divergence(a, b));
      } else if (leq(a, b)) {
        landmark_set.insert(b.depth);
      }
    }
    std::vector<Rat> landmarks(landmark_set.begin(), landmark_set.end());

    std::vector<std::pair<Rat, Rat>> gaps;
    gaps.emplace_back(landmarks.front() - 1, landmarks.front());
    for (size_t i = 0; i + 1 < landmarks.size(); ++i) {
      gaps.emplace_back(landmarks[i], landmarks[i + 1]);
    }

    std::set<Rat> own_turns(a.turns.begin(), a.turns.end());
    for (const auto& [lo, hi] : gaps) {
      // A point sitting on a's path strictly inside the gap.
      Rat delta = simplest_in(lo, hi, Parity::Odd);
      candidates.push_back(Node{turns_below(a, delta), delta});
      // A fresh branch leaving a's path strictly inside the gap.
      Rat g = simplest_in(lo, hi, Parity::Even, std::nullopt, own_turns);
      std::vector<Rat> turns = turns_below(a, g);
      turns.push_back(g);
      Rat d = simplest_in(g, hi, Parity::Odd);
      candidates.push_back(Node{std::move(turns), d});
    }

    candidates.push_back(below(a));
  }

  for (const Node& a : base) candidates.push_back(a);

  std::vector<Node> deduped;
  std::set<std::string> seen;
  for (const Node& c : candidates) {
    std::string sig = qf_type_signature(c, base);
    if (seen.insert(std::move(sig)).second) deduped.push_back(c);
  }
  return deduped;
}

}  // namespace semitree
