#include "semitree/behavior.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "semitree/engine.hpp"
#include "semitree/enumeration.hpp"
#include "semitree/transform.hpp"

namespace semitree {

namespace {

Rat make_rat(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

using TypeTable = std::string;  // row-major pair types, 'x' on the diagonal

struct Config {
  FiniteStructure structure;
  std::vector<int> extension;
};

TypeTable table_of(const FiniteStructure& s, const std::vector<int>& order) {
  const int n = s.n;
  std::vector<int> pos(n);
  for (int p = 0; p < n; ++p) pos[order[p]] = p;
  TypeTable tab(static_cast<size_t>(n) * n, 'x');
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      PairType t;
      if (s.lt_at(i, j)) {
        t = PairType::LT;
      } else if (s.lt_at(j, i)) {
        t = PairType::GT;
      } else {
        t = pos[i] < pos[j] ? PairType::PerpBefore : PairType::PerpAfter;
      }
      tab[static_cast<size_t>(i) * n + j] = static_cast<char>('0' + static_cast<int>(t));
    }
  }
  return tab;
}

const std::map<TypeTable, Config>& realized_tables(int n) {
  static std::mutex mu;
  static std::map<int, std::map<TypeTable, Config>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::map<TypeTable, Config> tables;
  for (const LabeledStructure& ls : enumerate_labeled_age_structures(n)) {
    for (const std::vector<int>& ext : convex_extensions(ls.structure)) {
      tables.emplace(table_of(ls.structure, ext), Config{ls.structure, ext});
    }
  }
  return cache.emplace(n, std::move(tables)).first->second;
}

}  // namespace

PairType reverse_pair_type(PairType t) {
  switch (t) {
    case PairType::LT:
      return PairType::GT;
    case PairType::GT:
      return PairType::LT;
    case PairType::PerpBefore:
      return PairType::PerpAfter;
    case PairType::PerpAfter:
      return PairType::PerpBefore;
  }
  return t;
}

std::string pair_type_to_string(PairType t) {
  switch (t) {
    case PairType::LT:
      return "lt";
    case PairType::GT:
      return "gt";
    case PairType::PerpBefore:
      return "perp-before";
    case PairType::PerpAfter:
      return "perp-after";
  }
  return "?";
}

Behavior Behavior::symmetric(PairType lt_image, PairType perp_before_image) {
  Behavior b;
  b.image[static_cast<int>(PairType::LT)] = lt_image;
  b.image[static_cast<int>(PairType::GT)] = reverse_pair_type(lt_image);
  b.image[static_cast<int>(PairType::PerpBefore)] = perp_before_image;
  b.image[static_cast<int>(PairType::PerpAfter)] = reverse_pair_type(perp_before_image);
  return b;
}

bool Behavior::is_symmetric() const {
  return apply(PairType::GT) == reverse_pair_type(apply(PairType::LT)) &&
         apply(PairType::PerpAfter) == reverse_pair_type(apply(PairType::PerpBefore));
}

std::string behavior_to_string(const Behavior& b) {
  std::string out = "[";
  const char* names[4] = {"lt", "gt", "pb", "pa"};
  for (int t = 0; t < 4; ++t) {
    if (t) out += ", ";
    out += names[t];
    out += "->";
    out += pair_type_to_string(b.image[t]);
  }
  out += "]";
  return out;
}

BehaviorCheck behavior_consistent(const Behavior& b, int k) {
  if (k > 4) {
    throw std::invalid_argument("behavior_consistent: sizes above 4 are not supported");
  }
  BehaviorCheck result;
  for (int n = 2; n <= k; ++n) {
    const auto& realized = realized_tables(n);
    for (const auto& [tab, config] : realized) {
      TypeTable rewritten = tab;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          const size_t at = static_cast<size_t>(i) * n + j;
          PairType t = static_cast<PairType>(tab[at] - '0');
          rewritten[at] = static_cast<char>('0' + static_cast<int>(b.apply(t)));
        }
      }
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          PairType tij = static_cast<PairType>(rewritten[static_cast<size_t>(i) * n + j] - '0');
          PairType tji = static_cast<PairType>(rewritten[static_cast<size_t>(j) * n + i] - '0');
          if (tji != reverse_pair_type(tij)) {
            result.consistent = false;
            result.certificate = BehaviorCertificate{
                config.structure, config.extension,
                "rewritten types of the pair (" + std::to_string(i) + "," +
                    std::to_string(j) + ") are not mutually reverse"};
            return result;
          }
        }
      }
      if (realized.find(rewritten) == realized.end()) {
        result.consistent = false;
        result.certificate = BehaviorCertificate{
            config.structure, config.extension,
            "the rewritten configuration is not realizable with any convex order"};
        return result;
      }
    }
  }
  return result;
}

std::string behavior_class_to_string(BehaviorClass c) {
  switch (c) {
    case BehaviorClass::Flat:
      return "flat";
    case BehaviorClass::Thin:
      return "thin";
    case BehaviorClass::OrderPreserving:
      return "order-preserving";
  }
  return "?";
}

std::vector<SurvivingBehavior> enumerate_surviving_behaviors() {
  std::vector<SurvivingBehavior> out;
  for (int lt_img = 0; lt_img < 4; ++lt_img) {
    for (int pb_img = 0; pb_img < 4; ++pb_img) {
      Behavior b = Behavior::symmetric(static_cast<PairType>(lt_img),
                                       static_cast<PairType>(pb_img));
      if (!behavior_consistent(b, 3).consistent) continue;

      const PairType li = b.apply(PairType::LT);
      const PairType pi = b.apply(PairType::PerpBefore);
      const bool comparability = [](PairType t) {
        return t == PairType::LT || t == PairType::GT;
      }(li);
      const bool perp_to_comp = pi == PairType::LT || pi == PairType::GT;

      int matches = 0;
      BehaviorClass cls = BehaviorClass::Flat;
      if (!comparability) {
        cls = BehaviorClass::Flat;
        ++matches;
      }
      if (comparability && perp_to_comp) {
        cls = BehaviorClass::Thin;
        ++matches;
      }
      if (li == PairType::LT && !perp_to_comp) {
        cls = BehaviorClass::OrderPreserving;
        ++matches;
      }
      if (matches != 1) {
        throw std::logic_error("surviving behavior " + behavior_to_string(b) +
                               " does not fall into exactly one class");
      }
      out.push_back(SurvivingBehavior{b, cls});
    }
  }
  return out;
}

std::string orbit_label_to_string(OrbitLabel l) {
  switch (l) {
    case OrbitLabel::BelowA:
      return "below";
    case OrbitLabel::AboveA:
      return "above";
    case OrbitLabel::PerpBeforeA:
      return "perp-before";
    case OrbitLabel::PerpAfterA:
      return "perp-after";
  }
  return "?";
}

OrbitLabel orbit_of(const Node& p, const Node& a, PrecHint hint) {
  validate_node(p);
  validate_node(a);
  if (p == a) throw std::invalid_argument("orbit_of: the two points coincide");
  if (lt(p, a)) return OrbitLabel::BelowA;
  if (lt(a, p)) return OrbitLabel::AboveA;
  const Rat g = *divergence(p, a);
  bool p_turns = false;
  for (const Rat& t : p.turns) {
    if (t == g) p_turns = true;
  }
  const bool turning_after = hint == PrecHint::TurnSideAfter;
  if (p_turns == turning_after) return OrbitLabel::PerpAfterA;
  return OrbitLabel::PerpBeforeA;
}

std::vector<OneConstantCheck> one_constant_checks() {
  std::vector<OneConstantCheck> checks;

  {
    OneConstantCheck c;
    c.name = "incomparable-pair-above-a-point";
    c.detail = "two incomparable points above a common point (forbidden image pattern)";
    c.expected_realizable = false;
    FiniteStructure s;
    s.n = 3;
    s.leq.assign(3, std::vector<bool>(3, false));
    for (int i = 0; i < 3; ++i) s.leq[i][i] = true;
    s.leq[0][1] = true;  // z < u1
    s.leq[0][2] = true;  // z < u2
    c.observed_realizable = embed_structure(s).ok();
    c.pass = c.observed_realizable == c.expected_realizable;
    checks.push_back(std::move(c));
  }

  {
    OneConstantCheck c;
    c.name = "broken-transitivity-pattern";
    c.detail = "x < y < z with x incomparable to z (forbidden image pattern)";
    c.expected_realizable = false;
    FiniteStructure s;
    s.n = 3;
    s.leq.assign(3, std::vector<bool>(3, false));
    for (int i = 0; i < 3; ++i) s.leq[i][i] = true;
    s.leq[0][1] = true;  // x < y
    s.leq[1][2] = true;  // y < z
    c.observed_realizable = embed_structure(s).ok();
    c.pass = c.observed_realizable == c.expected_realizable;
    checks.push_back(std::move(c));
  }

  {
    OneConstantCheck c;
    c.name = "rearrangement-image-pattern";
    c.detail = "the image pattern of rearranging around the upper chain of a "
               "two-point chain with side points";
    c.expected_realizable = true;
    const Node z2{{}, Rat(0)};
    const Node z1{{}, Rat(1)};
    const Node a{{}, Rat(2)};
    const Node u1{{make_rat(1, 2)}, Rat(1)};
    const Node u2{{make_rat(3, 4)}, Rat(1)};
    std::vector<Node> points = {z2, z1, a, u1, u2};
    RerootSpec spec;
    spec.pivot = z1;
    bool ok = true;
    try {
      MappedSet m = reroot(points, spec);
      const Node &fz2 = m.image[0], &fz1 = m.image[1], &fa = m.image[2];
      const Node &fu1 = m.image[3], &fu2 = m.image[4];
      ok = lt(fz2, fz1) && lt(fu1, fz1) && lt(fu2, fz1) && perp(fu1, fz2) &&
           perp(fu2, fz2) && perp(fa, fz1) && perp(fa, fz2) && perp(fa, fu1) &&
           perp(fa, fu2) && perp(fu1, fu2);
    } catch (const std::exception&) {
      ok = false;
    }
    c.observed_realizable = ok;
    c.pass = c.observed_realizable == c.expected_realizable;
    checks.push_back(std::move(c));
  }

  {
    OneConstantCheck c;
    c.name = "empty-configuration";
    c.detail = "the empty configuration is vacuously realizable";
    c.expected_realizable = true;
    FiniteStructure s;
    c.observed_realizable = embed_structure(s).ok();
    c.pass = c.observed_realizable == c.expected_realizable;
    checks.push_back(std::move(c));
  }

  return checks;
}

std::string one_constant_report(const std::vector<OneConstantCheck>& checks) {
  size_t width = 4;
  for (const auto& c : checks) width = std::max(width, c.name.size());
  std::string out;
  out += "check";
  out.append(width > 5 ? width - 5 + 2 : 2, ' ');
  out += "expected   observed   verdict\n";
  for (const auto& c : checks) {
    out += c.name;
    out.append(width - c.name.size() + 2, ' ');
    out += c.expected_realizable ? "realizable " : "forbidden  ";
    out += c.observed_realizable ? "realizable " : "forbidden  ";
    out += c.pass ? "pass" : "FAIL";
    out += "\n";
  }
  return out;
}

}  // namespace semitree
