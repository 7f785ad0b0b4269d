#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "semitree/csp.hpp"
#include "semitree/sampler.hpp"

using namespace semitree;
using semitree::test::mk;

namespace {

std::optional<Assignment> solve_text(const std::string& text) {
  return solve(parse_instance(text));
}

}  // namespace

TEST_CASE("parsing collects variables and atoms") {
  ConstraintInstance inst = parse_instance(
      "# heading comment\n"
      "x < y\n"
      "\n"
      "C(z, x y)  # trailing comment\n");
  CHECK(inst.variables == std::vector<std::string>{"x", "y", "z"});
  REQUIRE(inst.atoms.size() == 2);
  CHECK(inst.atoms[0].rel == RelationName::lt);
  CHECK(inst.atoms[1].rel == RelationName::C);
  CHECK(inst.atoms[1].args == std::vector<int>{2, 0, 1});
  CHECK(atom_to_string(inst, inst.atoms[0]) == "x < y");
}

TEST_CASE("parsing rejects non-atomic lines and garbage") {
  CHECK_THROWS_AS(parse_instance("x < y | y < x\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_instance("!x = y\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_instance("x <\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_instance("Q(x, y, z)\n"), std::invalid_argument);
}

TEST_CASE("frozen satisfiable instances") {
  auto branch = solve_text("x || y\nC(z, x y)\n");
  REQUIRE(branch.has_value());
  ConstraintInstance inst = parse_instance("x || y\nC(z, x y)\n");
  CHECK(check(inst, *branch).ok);
  CHECK(rel_C(branch->at("z"), branch->at("x"), branch->at("y")));

  auto chain = solve_text("x < y\ny < z\n");
  REQUIRE(chain.has_value());
  CHECK(lt(chain->at("x"), chain->at("y")));
  CHECK(lt(chain->at("y"), chain->at("z")));

  auto mixed = solve_text("x < z\ny || z\nB(x, z, w)\n");
  REQUIRE(mixed.has_value());
  CHECK(check(parse_instance("x < z\ny || z\nB(x, z, w)\n"), *mixed).ok);
}

TEST_CASE("frozen unsatisfiable instances") {
  CHECK_FALSE(solve_text("x < y\ny < x\n").has_value());
  CHECK_FALSE(solve_text("B(x, y, z)\nB(y, x, z)\n").has_value());
  // two outsiders on one incomparability triple
  CHECK_FALSE(solve_text("x || y\ny || z\nx || z\nC(z, x y)\nC(x, y z)\n").has_value());
  // mutual outsiders over an overlapping pair: C(u, x y) pins the divergence
  // of u and y to that of u and x, leaving no room for C(x, u y)
  CHECK_FALSE(solve_text("C(u, x y)\nC(x, u y)\n").has_value());
  // D forces x and u incomparable in both of its disjuncts
  CHECK_FALSE(solve_text("D(x, y, u, v)\nx = u\n").has_value());
  // incomparable points cannot sit below a common point
  CHECK_FALSE(solve_text("x || y\nz < x\nz < y\n").has_value());
}

TEST_CASE("solver agrees with the brute force oracle on random instances") {
  Sampler sampler(91);
  const char* shapes[] = {"eq", "neq", "lt", "perp", "B", "C", "R"};
  for (int it = 0; it < 150; ++it) {
    std::ostringstream text;
    const int nvars = 2 + static_cast<int>(sampler.next_u64() % 3);
    const int natoms = 1 + static_cast<int>(sampler.next_u64() % 3);
    auto var = [&] { return std::string(1, char('t' + sampler.next_u64() % nvars)); };
    for (int k = 0; k < natoms; ++k) {
      const std::string rel = shapes[sampler.next_u64() % 7];
      if (rel == "eq") text << var() << " = " << var() << "\n";
      else if (rel == "neq") text << var() << " != " << var() << "\n";
      else if (rel == "lt") text << var() << " < " << var() << "\n";
      else if (rel == "perp") text << var() << " || " << var() << "\n";
      else if (rel == "B") text << "B(" << var() << ", " << var() << ", " << var() << ")\n";
      else if (rel == "C") text << "C(" << var() << ", " << var() << " " << var() << ")\n";
      else text << "R(" << var() << ", " << var() << ", " << var() << ")\n";
    }
    ConstraintInstance inst = parse_instance(text.str());
    auto answer = solve(inst);
    bool oracle = brute_force_oracle(inst);
    CHECK_MESSAGE(answer.has_value() == oracle, "instance:\n", text.str());
    if (answer) CHECK(check(inst, *answer).ok);
  }
}

TEST_CASE("check pinpoints the failing atom") {
  ConstraintInstance inst = parse_instance("x < y\nx || y\n");
  Assignment bad{{"x", mk({}, "2")}, {"y", mk({}, "1")}};
  CheckResult r = check(inst, bad);
  CHECK_FALSE(r.ok);
  REQUIRE(r.failing_atom.has_value());
  CHECK(*r.failing_atom == 1);

  Assignment incomplete{{"x", mk({}, "2")}};
  CHECK_THROWS_AS(check(inst, incomplete), std::invalid_argument);
}

TEST_CASE("solver rejects oversized instances") {
  std::ostringstream text;
  for (char v = 'a'; v <= 'i'; ++v) text << "a != " << v << "\n";
  CHECK_THROWS_AS(solve(parse_instance(text.str())), std::invalid_argument);
}

TEST_CASE("assignments serialize to JSON by variable name") {
  Assignment a{{"x", mk({"1/2"}, "1")}, {"y", mk({}, "0")}};
  nlohmann::json j = assignment_to_json(a);
  REQUIRE(j.contains("x"));
  CHECK(node_from_json(j["x"]) == mk({"1/2"}, "1"));
  CHECK(node_from_json(j["y"]) == mk({}, "0"));
}
