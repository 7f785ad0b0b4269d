#include "semitree/sampler.hpp"

#include <algorithm>

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

long Sampler::uniform_long(long lo, long hi) {
  const unsigned long span = static_cast<unsigned long>(hi - lo) + 1;
  return lo + static_cast<long>(next_u64() % span);
}

Rat Sampler::random_rational(Parity parity) {
  if (parity == Parity::Odd) {
    const long q = 2 * uniform_long(0, 5) + 1;
    const long p = uniform_long(-8 * q, 8 * q);
    Rat r(p, q);
    r.canonicalize();
    return r;  // reduced denominator divides q, hence stays odd
  }
  const long q = 2 * uniform_long(1, 6);
  const long p = 2 * uniform_long(-2 * q, 2 * q - 1) + 1;
  Rat r(p, q);
  r.canonicalize();
  return r;  // odd numerator keeps every factor 2 of q in the denominator
}

Node Sampler::random_node() {
  const int nturns = static_cast<int>(uniform_long(0, 3));
  std::vector<Rat> positions;
  for (int i = 0; i < nturns; ++i) positions.push_back(random_rational(Parity::Even));
  std::sort(positions.begin(), positions.end());
  positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
  Rat last = positions.empty() ? random_rational(Parity::Odd) - 1 : positions.back();
  Rat depth = simplest_in(last, last + uniform_long(1, 3), Parity::Odd);
  return Node{std::move(positions), std::move(depth)};
}

Node Sampler::random_probe(const std::vector<Node>& base) {
  if (base.empty()) return random_node();
  const Node& a = base[next_u64() % base.size()];
  switch (uniform_long(0, 4)) {
    case 0:
      return random_node();
    case 1: {
      // Deeper on a's path, possibly with one extra turn below its depth.
      std::vector<Rat> turns = a.turns;
      Rat cut = a.depth + uniform_long(0, 2);
      if (coin()) {
        Rat g = simplest_in(cut, cut + 1, Parity::Even);
        turns.push_back(g);
        cut = g;
      }
      Rat depth = simplest_in(cut, cut + uniform_long(1, 3), Parity::Odd);
      return Node{std::move(turns), std::move(depth)};
    }
    case 2: {
      // Sitting on a's path above its depth.
      Rat lo = a.depth - uniform_long(1, 3);
      Rat d = simplest_in(lo, a.depth, Parity::Odd);
      return Node{turns_below(a, d), std::move(d)};
    }
    case 3: {
      // Branching off a's path above its depth.
      Rat lo = a.depth - uniform_long(1, 3);
      std::set<Rat> avoid(a.turns.begin(), a.turns.end());
      Rat g = simplest_in(lo, a.depth, Parity::Even, std::nullopt, avoid);
      std::vector<Rat> turns = turns_below(a, g);
      turns.push_back(g);
      Rat depth = simplest_in(g, g + uniform_long(1, 3), Parity::Odd);
      return Node{std::move(turns), std::move(depth)};
    }
    default: {
      // Shallow prefix of a extended by a fresh tail.
      Rat cut = a.depth - uniform_long(1, 2);
      std::vector<Rat> turns = turns_below(a, cut);
      std::set<Rat> avoid(a.turns.begin(), a.turns.end());
      Rat g = simplest_in(cut, a.depth + 1, Parity::Even, std::nullopt, avoid);
      turns.push_back(g);
      Rat depth = simplest_in(g, g + uniform_long(1, 2), Parity::Odd);
      return Node{std::move(turns), std::move(depth)};
    }
  }
}

std::vector<Node> Sampler::random_node_set(int k) {
  std::vector<Node> out;
  long esc = 0;
  int guard = 0;
  while (static_cast<int>(out.size()) < k) {
    Node p;
    if (guard++ < 100 * (k + 1)) {
      p = random_probe(out);
    } else {
      // Guaranteed-progress fallback far away from every sampled position.
      Rat t(2 * (1000 + ++esc) + 1, 2);
      t.canonicalize();
      p = Node{{t}, simplest_in(t, t + 1, Parity::Odd)};
    }
    bool fresh = true;
    for (const Node& e : out) {
      if (e == p) fresh = false;
    }
    if (fresh) out.push_back(std::move(p));
  }
  return out;
}

std::vector<Node> Sampler::random_antichain(int k) {
  std::vector<Node> out;
  long esc = 0;
  int guard = 0;
  while (static_cast<int>(out.size()) < k) {
    Node p;
    if (guard++ < 20 * (k + 1)) {
      p = random_probe(out);
    } else {
      // Fallback: ever lower fresh first turns force incomparability.
      Rat t(-2 * (1000 + ++esc) + 1, 2);
      t.canonicalize();
      p = Node{{t}, simplest_in(t, t + 1, Parity::Odd)};
    }
    bool ok = true;
    for (const Node& e : out) {
      if (e == p || !perp(e, p)) ok = false;
    }
    if (ok) out.push_back(std::move(p));
  }
  return out;
}

std::pair<Node, Node> Sampler::random_comparable_pair() {
  Node lower = random_node();
  Rat lo = lower.depth - uniform_long(1, 3);
  Rat d = simplest_in(lo, lower.depth, Parity::Odd);
  Node upper{turns_below(lower, d), std::move(d)};
  return {std::move(lower), std::move(upper)};
}

}  // namespace semitree
