#include "semitree/axioms.hpp"

#include <algorithm>
#include <set>

#include "semitree/grid.hpp"
#include "semitree/sampler.hpp"
#include "semitree/witness.hpp"

namespace semitree {

namespace {

void record(AxiomCheck& check, bool ok, const std::string& ce) {
  ++check.samples;
  if (!ok) {
    ++check.violations;
    if (check.first_counterexample.empty()) check.first_counterexample = ce;
  }
}

Rat first_position(const Node& a) {
  return a.turns.empty() ? a.depth : a.turns.front();
}

std::vector<Rat> turns_below(const Node& a, const Rat& cut) {
  std::vector<Rat> out;
  for (const Rat& t : a.turns) {
    if (t < cut) out.push_back(t);
  }
  return out;
}

}  // namespace

bool AxiomReport::all_passed() const {
  for (const AxiomCheck& c : checks) {
    if (c.violations > 0) return false;
  }
  return true;
}

AxiomReport run_axiom_suite(long samples, uint64_t seed) {
  Sampler sampler(seed);
  AxiomReport report;
  report.checks = {
      AxiomCheck{"partial-order-laws"},     AxiomCheck{"up-sets-are-chains"},
      AxiomCheck{"common-upper-bounds"},    AxiomCheck{"density-witnesses"},
      AxiomCheck{"no-joins-refinement"},    AxiomCheck{"branching-witnesses"},
      AxiomCheck{"one-C-per-perp-triple"},  AxiomCheck{"position-class-density"},
  };
  AxiomCheck& order_laws = report.checks[0];
  AxiomCheck& upset_chains = report.checks[1];
  AxiomCheck& upper_bounds = report.checks[2];
  AxiomCheck& density = report.checks[3];
  AxiomCheck& no_joins = report.checks[4];
  AxiomCheck& branching = report.checks[5];
  AxiomCheck& one_c = report.checks[6];
  AxiomCheck& class_density = report.checks[7];

  for (long it = 0; it < samples; ++it) {
    std::vector<Node> set = sampler.random_node_set(3);
    const Node &a = set[0], &b = set[1], &c = set[2];
    {
      bool ok = leq(a, a) && leq(b, b) && leq(c, c);
      if (leq(a, b) && leq(b, a) && !(a == b)) ok = false;
      if (leq(a, b) && leq(b, c) && !leq(a, c)) ok = false;
      if (leq(b, a) && leq(a, c) && !leq(b, c)) ok = false;
      record(order_laws, ok,
             node_to_string(a) + " " + node_to_string(b) + " " + node_to_string(c));
    }
    {
      // Everything above a common point is pairwise comparable.
      bool ok = true;
      for (const Node& base : set) {
        for (const Node& p : set) {
          for (const Node& q : set) {
            if (leq(base, p) && leq(base, q) && perp(p, q)) ok = false;
          }
        }
      }
      record(upset_chains, ok,
             node_to_string(a) + " " + node_to_string(b) + " " + node_to_string(c));
    }
    {
      Rat mn = std::min(first_position(a), first_position(b));
      Node z{{}, simplest_in(mn - 1, mn, Parity::Odd)};
      record(upper_bounds, leq(a, z) && leq(b, z),
             node_to_string(a) + " vs " + node_to_string(b));
    }
    {
      auto [lower, upper] = sampler.random_comparable_pair();
      Node mid = between(lower, upper);
      Node up = above(upper);
      Node down = below(lower);
      bool ok = lt(lower, mid) && lt(mid, upper) && lt(upper, up) && lt(down, lower);
      record(density, ok, node_to_string(lower) + " < " + node_to_string(upper));
    }
    {
      std::vector<Node> pair_set = sampler.random_antichain(2);
      const Node &x = pair_set[0], &y = pair_set[1];
      const Rat g = *divergence(x, y);
      Rat mn = std::min(first_position(x), first_position(y));
      Node z{{}, simplest_in(mn - 1, mn, Parity::Odd)};
      bool ok = leq(x, z) && leq(y, z);
      if (ok) {
        // A strictly smaller common upper bound exists below z.
        Rat delta = simplest_in(z.depth, g, Parity::Odd);
        Node z2{turns_below(x, delta), delta};
        ok = leq(x, z2) && leq(y, z2) && lt(z2, z);
      }
      record(no_joins, ok, node_to_string(x) + " || " + node_to_string(y));
    }
    {
      auto [lower, upper] = sampler.random_comparable_pair();
      bool ok = true;
      std::string ce;
      // A branch below upper that avoids lower.
      Node u = branch_off(lower, upper.depth, lower.depth);
      if (!(perp(u, lower) && lt(u, upper))) {
        ok = false;
        ce = "branch " + node_to_string(u) + " for " + node_to_string(lower) + " < " +
             node_to_string(upper);
      }
      // A point above one leg of an incomparable pair, still off the other.
      std::vector<Node> pair_set = sampler.random_antichain(2);
      const Node &x = pair_set[0], &y = pair_set[1];
      const Rat g = *divergence(x, y);
      Rat delta = simplest_in(g, x.depth, Parity::Odd);
      Node w{turns_below(x, delta), delta};
      if (!(leq(x, w) && perp(w, y))) {
        ok = false;
        if (ce.empty()) ce = "side point " + node_to_string(w);
      }
      record(branching, ok, ce);
    }
    {
      std::vector<Node> tri = sampler.random_antichain(3);
      int count = 0;
      if (rel_C(tri[0], tri[1], tri[2])) ++count;
      if (rel_C(tri[1], tri[0], tri[2])) ++count;
      if (rel_C(tri[2], tri[0], tri[1])) ++count;
      record(one_c, count == 1,
             node_to_string(tri[0]) + " " + node_to_string(tri[1]) + " " +
                 node_to_string(tri[2]));
    }
    {
      Rat lo = sampler.random_rational(Parity::Odd);
      Rat hi = lo + sampler.uniform_long(1, 4);
      Rat odd = simplest_in(lo, hi, Parity::Odd);
      Rat even = simplest_in(lo, hi, Parity::Even);
      bool ok = lo < odd && odd < hi && is_depth_class(odd) && lo < even &&
                even < hi && is_turn_class(even);
      record(class_density, ok, rational_to_string(lo) + ".." + rational_to_string(hi));
    }
  }
  return report;
}

std::string axiom_report_to_string(const AxiomReport& report) {
  size_t width = 5;
  for (const auto& c : report.checks) width = std::max(width, c.name.size());
  std::string out;
  out += "check";
  out.append(width - 5 + 2, ' ');
  out += "samples  violations  status\n";
  for (const auto& c : report.checks) {
    out += c.name;
    out.append(width - c.name.size() + 2, ' ');
    std::string s = std::to_string(c.samples);
    out += s;
    out.append(s.size() < 7 ? 7 - s.size() + 2 : 2, ' ');
    std::string v = std::to_string(c.violations);
    out += v;
    out.append(v.size() < 10 ? 10 - v.size() + 2 : 2, ' ');
    out += c.violations == 0 ? "ok" : "VIOLATED";
    out += "\n";
    if (c.violations > 0) {
      out += "  first counterexample: " + c.first_counterexample + "\n";
    }
  }
  return out;
}

long count_rel_C_oracle_disagreements(long samples, uint64_t seed) {
  Sampler sampler(seed);
  long disagreements = 0;
  for (long it = 0; it < samples; ++it) {
    std::vector<Node> tri =
        (it % 2 == 0) ? sampler.random_antichain(3) : sampler.random_node_set(3);
    const Node &z = tri[0], &x = tri[1], &y = tri[2];

    bool closed = rel_C(z, x, y);

    bool oracle = false;
    if (perp(x, y)) {
      std::set<Rat> anchor_set;
      for (auto [p, q] : {std::pair<const Node&, const Node&>{x, y}, {z, x}, {z, y}}) {
        if (auto d = divergence(p, q)) anchor_set.insert(*d);
      }
      std::vector<Rat> anchors(anchor_set.begin(), anchor_set.end());
      std::vector<std::pair<Rat, Rat>> segments;
      segments.emplace_back(anchors.front() - 2, anchors.front());
      for (size_t i = 0; i + 1 < anchors.size(); ++i) {
        segments.emplace_back(anchors[i], anchors[i + 1]);
      }
      segments.emplace_back(anchors.back(), anchors.back() + 2);

      // 32 odd-class depths straddling every divergence position.
      std::vector<Rat> grid;
      const int per = static_cast<int>((32 + segments.size() - 1) / segments.size());
      for (const auto& [lo, hi] : segments) {
        const Rat step = (hi - lo) / (per + 1);
        for (int k = 1; k <= per && static_cast<int>(grid.size()) < 32; ++k) {
          grid.push_back(simplest_in(lo + step * k - step / 2, lo + step * k + step / 2,
                                     Parity::Odd));
        }
      }

      for (const Rat& delta : grid) {
        Node u{turns_below(x, delta), delta};
        if (leq(x, u) && leq(y, u) && perp(u, z)) {
          oracle = true;
          break;
        }
      }
    }

    if (closed != oracle) ++disagreements;
  }
  return disagreements;
}

long count_negB_identity_disagreements(long samples, uint64_t seed) {
  Sampler sampler(seed);
  long disagreements = 0;
  for (long it = 0; it < samples; ++it) {
    std::vector<Node> tri = sampler.random_node_set(3);
    Node a = tri[0], b = tri[1], c = tri[2];
    // Exercise the equality disjuncts as well.
    if (sampler.uniform_long(0, 3) == 0) b = a;
    if (sampler.uniform_long(0, 7) == 0) c = b;

    const bool direct = !rel_B(a, b, c);

    bool witnessed = (a == b) || (b == c) || (c == a);
    if (!witnessed) {
      for (const Node& xw : witness_grid({a, b, c})) {
        if (rel_B(a, xw, b) && rel_B(b, xw, c)) {
          witnessed = true;
          break;
        }
      }
    }

    if (direct != witnessed) ++disagreements;
  }
  return disagreements;
}

}  // namespace semitree
