#include "semitree/classify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "semitree/engine.hpp"
#include "semitree/sampler.hpp"
#include "semitree/structure.hpp"
#include "semitree/transform.hpp"

namespace semitree {

namespace {

int formula_arity(const ParsedFormula& phi) {
  return static_cast<int>(phi.variables.size());
}

// Calls fn with every k-tuple of indices drawn from [0, s) with repetition;
// fn returns false to stop the enumeration early.
template <typename Fn>
void for_each_tuple(int s, int k, Fn&& fn) {
  std::vector<int> idx(k, 0);
  while (true) {
    if (!fn(idx)) return;
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == s - 1) {
      idx[pos] = 0;
      --pos;
    }
    if (pos < 0) return;
    ++idx[pos];
  }
}

std::vector<Node> select(const std::vector<Node>& pool, const std::vector<int>& idx) {
  std::vector<Node> out;
  out.reserve(idx.size());
  for (int i : idx) out.push_back(pool[i]);
  return out;
}

// Scans all tuples over a mapped set for one where phi changes truth value.
bool record_violation(const QfFormula& f, int k, const std::vector<Node>& pre,
                      const std::vector<Node>& post, FamilyEvidence& ev) {
  bool violated = false;
  for_each_tuple(static_cast<int>(pre.size()), k, [&](const std::vector<int>& idx) {
    ++ev.tests;
    std::vector<Node> a = select(pre, idx);
    std::vector<Node> b = select(post, idx);
    if (eval_formula(f, a) != eval_formula(f, b)) {
      ev.preserved = false;
      ev.pre_tuple = std::move(a);
      ev.post_tuple = std::move(b);
      violated = true;
      return false;
    }
    return true;
  });
  return violated;
}

FamilyEvidence bijection_family(const QfFormula& f, int k, Sampler& sampler,
                                int sample_size, int structure_bound) {
  FamilyEvidence ev;
  ev.family = "bijections";
  // Cap the set size at 4 for ternary/quaternary formulas; 5! bijections
  // times 5^4 tuples per sample would dominate the whole run otherwise.
  const int cap = std::min(structure_bound, k <= 2 ? 5 : 4);
  const int lo = std::min(std::max(2, k), cap);
  for (int iter = 0; iter < sample_size && ev.preserved; ++iter) {
    const int s = static_cast<int>(sampler.uniform_long(lo, cap));
    std::vector<Node> x = sampler.random_node_set(s);
    std::vector<Node> y = sampler.random_node_set(s);
    std::vector<int> perm(s);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<Node> image(s);
      for (int i = 0; i < s; ++i) image[i] = y[perm[i]];
      if (record_violation(f, k, x, image, ev)) break;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return ev;
}

FamilyEvidence rerooting_family(const QfFormula& f, int k, Sampler& sampler,
                                int sample_size, int structure_bound) {
  FamilyEvidence ev;
  ev.family = "rerootings";
  const int cap = std::min(structure_bound, 5);
  const int lo = std::min(std::max(2, k), cap);
  for (int iter = 0; iter < sample_size && ev.preserved; ++iter) {
    const int s = static_cast<int>(sampler.uniform_long(lo, cap));
    std::vector<Node> x = sampler.random_node_set(s);
    RerootSpec spec;
    spec.pivot = x[sampler.uniform_long(0, s - 1)];
    // The pivot is in the set, so the flipped chain is never empty.
    MappedSet m = reroot(x, spec);
    record_violation(f, k, m.source, m.image, ev);
  }
  return ev;
}

FamilyEvidence partial_iso_family(const QfFormula& f, int k, Sampler& sampler,
                                  int sample_size, int structure_bound) {
  FamilyEvidence ev;
  ev.family = "partial-isomorphism extensions";
  const int cap = std::min(structure_bound, 5);
  const int lo = std::min(std::max(2, k), cap);
  for (int iter = 0; iter < sample_size && ev.preserved; ++iter) {
    const int s = static_cast<int>(sampler.uniform_long(lo, cap));
    std::vector<Node> x = sampler.random_node_set(s);
    EmbedResult er = embed_structure(induced_structure(x));
    if (!er.ok()) {
      throw std::logic_error("classify: realized structure failed to embed: " +
                             er.rejection->reason);
    }
    PartialIso rho{x, *er.nodes};
    Node probe = sampler.random_probe(x);
    const bool fresh =
        std::find(x.begin(), x.end(), probe) == x.end();
    if (fresh) rho = extend_partial_iso(rho, probe);
    record_violation(f, k, rho.domain, rho.range, ev);
  }
  return ev;
}

void check_classify_args(int k, int sample_size, int structure_bound) {
  if (k < 1 || k > 4) {
    throw std::invalid_argument("classify: arity must be between 1 and 4, got " +
                                std::to_string(k));
  }
  if (sample_size < 1) throw std::invalid_argument("classify: sample_size must be positive");
  if (structure_bound < 2 || structure_bound > 8) {
    throw std::invalid_argument("classify: structure_bound must be in [2, 8]");
  }
}

struct PatternFlags {
  bool permutations = true;
  bool reversal = true;
  bool rotation = true;
};

// Exhausts all weak order patterns of k values; evaluation on a dense chain
// depends only on the pattern, so this decides preservation exactly.
PatternFlags chain_pattern_flags(const QfFormula& f, int k) {
  PatternFlags flags;
  for_each_tuple(k, k, [&](const std::vector<int>& values) {
    std::vector<Rat> tuple(k);
    for (int i = 0; i < k; ++i) tuple[i] = Rat(values[i]);
    const bool truth = eval_formula_on_chain(f, tuple);

    std::vector<int> support(values);
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    const int m = static_cast<int>(support.size());
    std::vector<int> rank(k);
    for (int i = 0; i < k; ++i) {
      rank[i] = static_cast<int>(
          std::lower_bound(support.begin(), support.end(), values[i]) -
          support.begin());
    }

    if (flags.reversal) {
      std::vector<Rat> rev(k);
      for (int i = 0; i < k; ++i) rev[i] = -tuple[i];
      if (eval_formula_on_chain(f, rev) != truth) flags.reversal = false;
    }
    if (flags.rotation) {
      std::vector<Rat> rot(k);
      for (int i = 0; i < k; ++i) rot[i] = Rat((rank[i] + 1) % m);
      if (eval_formula_on_chain(f, rot) != truth) flags.rotation = false;
    }
    if (flags.permutations) {
      std::vector<int> perm(m);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        std::vector<Rat> img(k);
        for (int i = 0; i < k; ++i) img[i] = Rat(perm[rank[i]]);
        if (eval_formula_on_chain(f, img) != truth) {
          flags.permutations = false;
          break;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return flags.permutations || flags.reversal || flags.rotation;
  });
  return flags;
}

std::string node_list(const std::vector<Node>& nodes) {
  std::string out = "(";
  for (size_t i = 0; i < nodes.size(); ++i) {
    if (i) out += ", ";
    out += node_to_string(nodes[i]);
  }
  return out + ")";
}

Rat rat(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Two realizations of the same four leaves whose quartet relation D agrees
// everywhere while the branching relation C differs: a balanced cherry pair
// against a caterpillar. The identity index map is then a D-preserving,
// C-violating bijection.
MappedSet canned_d_proxy() {
  MappedSet m;
  m.source = {Node{{}, Rat(3)}, Node{{rat(5, 2)}, Rat(3)}, Node{{rat(1, 2)}, Rat(3)},
              Node{{rat(1, 2), rat(3, 2)}, Rat(3)}};
  m.image = {Node{{}, Rat(3)}, Node{{rat(5, 2)}, Rat(3)}, Node{{rat(3, 2)}, Rat(3)},
             Node{{rat(1, 2)}, Rat(3)}};
  return m;
}

// True when the map preserves every D-fact but changes at least one C-fact.
bool d_preserving_c_violating(const MappedSet& m) {
  const int n = static_cast<int>(m.source.size());
  bool c_changed = false;
  for (int z = 0; z < n; ++z) {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (z == x || z == y || x == y) continue;
        if (rel_C(m.source[z], m.source[x], m.source[y]) !=
            rel_C(m.image[z], m.image[x], m.image[y])) {
          c_changed = true;
        }
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
          if (x == y || x == u || x == v || y == u || y == v || u == v) continue;
          if (rel_D(m.source[x], m.source[y], m.source[u], m.source[v]) !=
              rel_D(m.image[x], m.image[y], m.image[u], m.image[v])) {
            return false;
          }
        }
      }
    }
  }
  return c_changed;
}

}  // namespace

Verdict classify(const ParsedFormula& phi, std::uint64_t seed, int sample_size,
                 int structure_bound) {
  const int k = formula_arity(phi);
  check_classify_args(k, sample_size, structure_bound);

  Sampler sampler(seed);
  Verdict verdict;
  verdict.evidence.push_back(
      bijection_family(phi.formula, k, sampler, sample_size, structure_bound));
  verdict.evidence.push_back(
      rerooting_family(phi.formula, k, sampler, sample_size, structure_bound));
  verdict.evidence.push_back(
      partial_iso_family(phi.formula, k, sampler, sample_size, structure_bound));

  if (verdict.evidence[0].preserved) {
    verdict.label = "equality-class";
  } else if (verdict.evidence[1].preserved) {
    verdict.label = "B-class";
  } else {
    verdict.label = "order-class";
  }
  verdict.caveat =
      "violations are definitive and re-checkable; 'preserved' reports that no "
      "violation was found in the sampled tests";
  return verdict;
}

std::string verdict_to_string(const Verdict& v) {
  std::ostringstream out;
  out << v.label << "\n";
  for (const FamilyEvidence& ev : v.evidence) {
    out << "  " << ev.family << ": "
        << (ev.preserved ? "preserved" : "violated") << " (" << ev.tests
        << " tuple tests)";
    if (!ev.preserved) {
      out << " counterexample " << node_list(ev.pre_tuple) << " -> "
          << node_list(ev.post_tuple);
    }
    out << "\n";
  }
  out << "  caveat: " << v.caveat << "\n";
  return out.str();
}

std::string chain_class_to_string(ChainClass c) {
  switch (c) {
    case ChainClass::Linear: return "linear";
    case ChainClass::BetwClass: return "Betw-class";
    case ChainClass::CycClass: return "Cyc-class";
    case ChainClass::SepClass: return "Sep-class";
    case ChainClass::EqualityClass: return "equality-class";
  }
  return "?";
}

namespace {

void require_order_atoms(const QfFormula& f) {
  if (f.kind == FormulaKind::Atom) {
    switch (f.rel) {
      case RelationName::eq:
      case RelationName::neq:
      case RelationName::leq:
      case RelationName::lt:
      case RelationName::gt:
      case RelationName::geq:
        return;
      default:
        throw std::invalid_argument(
            "chain_classify: atoms must be order comparisons, got " +
            relation_to_string(f.rel));
    }
  }
  for (const QfFormula& child : f.children) require_order_atoms(child);
}

}  // namespace

ChainClass chain_classify(const ParsedFormula& psi, int sample_size) {
  const int k = formula_arity(psi);
  if (k < 1 || k > 4) {
    throw std::invalid_argument("chain_classify: arity must be between 1 and 4");
  }
  if (sample_size < 0) {
    throw std::invalid_argument("chain_classify: sample_size must be non-negative");
  }
  require_order_atoms(psi.formula);

  PatternFlags flags = chain_pattern_flags(psi.formula, k);
  if (flags.permutations) return ChainClass::EqualityClass;
  if (flags.reversal && flags.rotation) return ChainClass::SepClass;
  if (flags.rotation) return ChainClass::CycClass;
  if (flags.reversal) return ChainClass::BetwClass;
  return ChainClass::Linear;
}

CoreHint model_complete_core_hint(const std::vector<ParsedFormula>& phis,
                                  std::uint64_t seed, int sample_size,
                                  int structure_bound) {
  int k_max = 1;
  for (const ParsedFormula& phi : phis) {
    const int k = formula_arity(phi);
    if (k < 1 || k > 4) {
      throw std::invalid_argument(
          "model_complete_core_hint: arity must be between 1 and 4");
    }
    k_max = std::max(k_max, k);
  }
  if (sample_size < 1 || structure_bound < 2 || structure_bound > 8) {
    throw std::invalid_argument("model_complete_core_hint: bad bounds");
  }

  CoreHint hint;
  Sampler sampler(seed);
  const int lo = std::min(std::max(2, k_max), structure_bound);
  std::vector<std::vector<Node>> samples;
  for (int i = 0; i < sample_size; ++i) {
    samples.push_back(sampler.random_node_set(
        static_cast<int>(sampler.uniform_long(lo, structure_bound))));
  }

  // One-element core: every relation is empty on all samples or holds on
  // every constant tuple, so a constant map preserves the positive diagrams.
  bool one_element = true;
  for (const ParsedFormula& phi : phis) {
    const int k = formula_arity(phi);
    bool empty = true;
    bool diagonal = true;
    for (const std::vector<Node>& set : samples) {
      for_each_tuple(static_cast<int>(set.size()), k,
                     [&](const std::vector<int>& idx) {
                       if (eval_formula(phi.formula, select(set, idx))) empty = false;
                       return empty;
                     });
      for (const Node& c : set) {
        if (!eval_formula(phi.formula, std::vector<Node>(k, c))) diagonal = false;
      }
      if (!empty && !diagonal) break;
    }
    if (!(empty || diagonal)) {
      one_element = false;
      break;
    }
  }
  if (one_element) {
    hint.label = "one-element";
    hint.evidence.push_back(
        "every relation is sampled-empty or diagonal-true, so constant maps "
        "preserve all positive facts");
    return hint;
  }

  // Equality core: all relations survive arbitrary bijections.
  bool all_equality = true;
  for (const ParsedFormula& phi : phis) {
    Sampler local(seed ^ 0x9e3779b97f4a7c15ull);
    FamilyEvidence ev = bijection_family(phi.formula, formula_arity(phi), local,
                                         sample_size, structure_bound);
    if (!ev.preserved) {
      all_equality = false;
      break;
    }
  }
  if (all_equality) {
    hint.label = "(Q;!=)";
    hint.evidence.push_back("all relations preserved by sampled bijections");
    return hint;
  }

  // Chain collapse: projecting every sample to a chain keeps all relations.
  bool thin_ok = true;
  for (const std::vector<Node>& set : samples) {
    MappedSet m = project_to_chain(set);
    for (const ParsedFormula& phi : phis) {
      FamilyEvidence scratch;
      if (record_violation(phi.formula, formula_arity(phi), m.source, m.image,
                           scratch)) {
        thin_ok = false;
        break;
      }
    }
    if (!thin_ok) break;
  }
  if (thin_ok) {
    hint.evidence.push_back("project_to_chain preserves all relations on samples");
    PatternFlags flags;
    for (const ParsedFormula& phi : phis) {
      PatternFlags f = chain_pattern_flags(phi.formula, formula_arity(phi));
      flags.permutations &= f.permutations;
      flags.reversal &= f.reversal;
      flags.rotation &= f.rotation;
    }
    if (flags.permutations) hint.label = "(Q;!=)";
    else if (flags.reversal && flags.rotation) hint.label = "(Q;Sep)";
    else if (flags.rotation) hint.label = "(Q;Cyc)";
    else if (flags.reversal) hint.label = "(Q;Betw)";
    else hint.label = "(Q;<)";
    return hint;
  }

  // Antichain collapse: flattening every sample keeps all relations.
  bool flat_ok = true;
  for (const std::vector<Node>& set : samples) {
    MappedSet m = flatten(set);
    for (const ParsedFormula& phi : phis) {
      FamilyEvidence scratch;
      if (record_violation(phi.formula, formula_arity(phi), m.source, m.image,
                           scratch)) {
        flat_ok = false;
        break;
      }
    }
    if (!flat_ok) break;
  }
  if (flat_ok) {
    hint.evidence.push_back("flatten preserves all relations on samples");
    std::vector<MappedSet> proxies;
    MappedSet canned = canned_d_proxy();
    if (!d_preserving_c_violating(canned)) {
      throw std::logic_error("model_complete_core_hint: canned leaf proxy broken");
    }
    proxies.push_back(canned);
    for (int iter = 0; iter < sample_size; ++iter) {
      std::vector<Node> anti =
          sampler.random_antichain(static_cast<int>(sampler.uniform_long(4, 5)));
      RerootSpec spec;
      spec.pivot = anti[sampler.uniform_long(0, static_cast<long>(anti.size()) - 1)];
      MappedSet m = reroot(anti, spec);
      if (d_preserving_c_violating(m)) proxies.push_back(m);
    }
    bool d_ok = true;
    for (const MappedSet& proxy : proxies) {
      for (const ParsedFormula& phi : phis) {
        FamilyEvidence scratch;
        if (record_violation(phi.formula, formula_arity(phi), proxy.source,
                             proxy.image, scratch)) {
          d_ok = false;
          break;
        }
      }
      if (!d_ok) break;
    }
    hint.evidence.push_back(
        std::to_string(proxies.size()) +
        " D-preserving C-violating leaf maps tested");
    hint.label = d_ok ? "(L2;D)" : "(L2;C)";
    return hint;
  }

  // Full semilinear world: split on whether rerootings are still symmetries.
  bool all_b = true;
  for (const ParsedFormula& phi : phis) {
    Verdict v = classify(phi, seed ^ 0xda3e39cb94b95bdbull, sample_size,
                         structure_bound);
    if (v.label == "order-class") {
      all_b = false;
      break;
    }
  }
  hint.label = all_b ? "(S2;B)" : "(S2;<,perp)";
  hint.evidence.push_back(all_b
                              ? "rerootings preserve all relations on samples"
                              : "a rerooting violates some relation");
  return hint;
}

}  // namespace semitree
