#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "semitree/axioms.hpp"
#include "semitree/behavior.hpp"
#include "semitree/classify.hpp"
#include "semitree/csp.hpp"
#include "semitree/engine.hpp"
#include "semitree/enumeration.hpp"
#include "semitree/structure.hpp"
#include "semitree/transform.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<semitree::Node> nodes_from_file(const std::string& path) {
  nlohmann::json j = nlohmann::json::parse(read_file(path));
  if (!j.is_array()) throw std::invalid_argument(path + ": expected a JSON array of nodes");
  std::vector<semitree::Node> out;
  for (const auto& item : j) out.push_back(semitree::node_from_json(item));
  return out;
}

int run(CLI::App& app, int argc, char** argv) {
  using namespace semitree;

  int exit_code = 0;
  app.require_subcommand(1);

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a relation on node JSON arguments");
  std::string eval_rel;
  std::vector<std::string> eval_args;
  eval_cmd->add_option("relation", eval_rel, "leq, lt, perp, B, C, R, D, ...")->required();
  eval_cmd->add_option("nodes", eval_args, "one JSON node per argument")->required();
  eval_cmd->callback([&] {
    RelationName rel = relation_from_string(eval_rel);
    std::vector<Node> nodes;
    for (const std::string& a : eval_args) nodes.push_back(node_from_json_text(a));
    if (static_cast<int>(nodes.size()) != relation_arity(rel)) {
      throw std::invalid_argument("eval: " + eval_rel + " takes " +
                                  std::to_string(relation_arity(rel)) + " arguments");
    }
    std::cout << (eval_relation(rel, nodes) ? "true" : "false") << "\n";
  });

  auto* solve_cmd = app.add_subcommand("solve", "Decide a constraint instance file");
  std::string solve_file;
  int solve_bound = 7;
  solve_cmd->add_option("file", solve_file, "instance file, one atom per line")->required();
  solve_cmd->add_option("--bound", solve_bound, "variable bound (default 7)");
  solve_cmd->callback([&] {
    ConstraintInstance inst = parse_instance(read_file(solve_file));
    std::optional<Assignment> a = solve(inst, solve_bound);
    if (a) {
      std::cout << "SAT\n" << assignment_to_json(*a).dump() << "\n";
    } else {
      std::cout << "UNSAT\n";
      exit_code = 1;
    }
  });

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force decide a constraint instance");
  std::string oracle_file;
  int oracle_bound = 5;
  oracle_cmd->add_option("file", oracle_file, "instance file")->required();
  oracle_cmd->add_option("--bound", oracle_bound, "variable bound (default 5)");
  oracle_cmd->callback([&] {
    ConstraintInstance inst = parse_instance(read_file(oracle_file));
    if (brute_force_oracle(inst, oracle_bound)) {
      std::cout << "SAT\n";
    } else {
      std::cout << "UNSAT\n";
      exit_code = 1;
    }
  });

  auto* embed_cmd = app.add_subcommand("embed", "Realize an abstract structure with nodes");
  std::string embed_file;
  embed_cmd->add_option("file", embed_file, "structure JSON file")->required();
  embed_cmd->callback([&] {
    FiniteStructure s = structure_from_json(nlohmann::json::parse(read_file(embed_file)));
    EmbedResult r = embed_structure(s);
    if (r.ok()) {
      nlohmann::json out = nlohmann::json::array();
      for (const Node& n : *r.nodes) out.push_back(node_to_json(n));
      std::cout << out.dump() << "\n";
    } else {
      nlohmann::json out;
      out["rejection"] = {{"point_index", r.rejection->point_index},
                          {"reason", r.rejection->reason}};
      std::cout << out.dump() << "\n";
      exit_code = 1;
    }
  });

  auto* ext_cmd = app.add_subcommand("extensions", "List convex linear extensions");
  std::string ext_file;
  ext_cmd->add_option("file", ext_file, "structure JSON file")->required();
  ext_cmd->callback([&] {
    FiniteStructure s = structure_from_json(nlohmann::json::parse(read_file(ext_file)));
    std::vector<std::vector<int>> exts = convex_extensions(s);
    std::cout << exts.size() << "\n";
    for (const auto& order : exts) {
      for (size_t i = 0; i < order.size(); ++i) {
        std::cout << (i ? " " : "") << order[i];
      }
      std::cout << "\n";
    }
  });

  auto* enum_cmd = app.add_subcommand("enumerate", "Count age structures of a given size");
  int enum_n = 0;
  bool enum_list = false;
  enum_cmd->add_option("n", enum_n, "number of points")->required();
  enum_cmd->add_flag("--list", enum_list, "also print one structure JSON per line");
  enum_cmd->callback([&] {
    std::vector<FiniteStructure> all = enumerate_age_structures(enum_n);
    std::cout << all.size() << "\n";
    if (enum_list) {
      for (const FiniteStructure& s : all) std::cout << structure_to_json(s).dump() << "\n";
    }
  });

  auto* reroot_cmd = app.add_subcommand("reroot", "Rearrange a node set around a chain");
  std::string reroot_file, reroot_pivot;
  reroot_cmd->add_option("file", reroot_file, "JSON array of nodes")->required();
  reroot_cmd->add_option("--pivot", reroot_pivot, "pivot node JSON")->required();
  reroot_cmd->callback([&] {
    std::vector<Node> pts = nodes_from_file(reroot_file);
    RerootSpec spec;
    spec.pivot = node_from_json_text(reroot_pivot);
    std::cout << mapped_set_to_json(reroot(pts, spec)).dump() << "\n";
  });

  auto* flatten_cmd = app.add_subcommand("flatten", "Map a node set onto an antichain");
  std::string flatten_file;
  flatten_cmd->add_option("file", flatten_file, "JSON array of nodes")->required();
  flatten_cmd->callback([&] {
    std::cout << mapped_set_to_json(flatten(nodes_from_file(flatten_file))).dump() << "\n";
  });

  auto* classify_cmd = app.add_subcommand("classify", "Classify a quantifier-free formula");
  std::string classify_formula;
  std::uint64_t classify_seed = 0;
  int classify_samples = 200, classify_bound = 5;
  bool classify_chain = false;
  classify_cmd->add_option("--formula", classify_formula, "e.g. \"x<y & y||z\"")->required();
  classify_cmd->add_option("--seed", classify_seed, "sampler seed")->required();
  classify_cmd->add_option("--samples", classify_samples, "sample count (default 200)");
  classify_cmd->add_option("--bound", classify_bound, "structure size bound (default 5)");
  classify_cmd->add_flag("--chain", classify_chain,
                         "classify over a dense chain instead (order atoms only)");
  classify_cmd->callback([&] {
    ParsedFormula phi = parse_formula(classify_formula);
    if (classify_chain) {
      std::cout << chain_class_to_string(chain_classify(phi)) << "\n";
    } else {
      Verdict v = classify(phi, classify_seed, classify_samples, classify_bound);
      std::cout << verdict_to_string(v);
    }
  });

  auto* behaviors_cmd = app.add_subcommand("behaviors", "Print the behavior survivor table");
  behaviors_cmd->callback([&] {
    std::vector<SurvivingBehavior> survivors = enumerate_surviving_behaviors();
    for (PairType lt : {PairType::LT, PairType::GT, PairType::PerpBefore, PairType::PerpAfter}) {
      for (PairType pb : {PairType::LT, PairType::GT, PairType::PerpBefore, PairType::PerpAfter}) {
        Behavior b = Behavior::symmetric(lt, pb);
        BehaviorCheck check = behavior_consistent(b, 3);
        std::cout << behavior_to_string(b) << "  ";
        if (check.consistent) {
          for (const SurvivingBehavior& s : survivors) {
            if (s.behavior == b) std::cout << "consistent  " << behavior_class_to_string(s.cls);
          }
        } else {
          std::cout << "rejected  " << check.certificate->reason;
        }
        std::cout << "\n";
      }
    }
    std::cout << "\n" << one_constant_report(one_constant_checks());
  });

  auto* axioms_cmd = app.add_subcommand("axioms", "Run the randomized axiom suite");
  long axioms_samples = 1000;
  std::uint64_t axioms_seed = 0;
  axioms_cmd->add_option("--samples", axioms_samples, "samples per check (default 1000)");
  axioms_cmd->add_option("--seed", axioms_seed, "sampler seed");
  axioms_cmd->callback([&] {
    AxiomReport report = run_axiom_suite(axioms_samples, axioms_seed);
    std::cout << axiom_report_to_string(report);
    if (!report.all_passed()) exit_code = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit clean; usage errors exit 2
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toolkit for the dense binary branching semilinear order"};
  try {
    return run(app, argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
