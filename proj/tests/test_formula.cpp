#include <doctest.h>

#include "helpers.hpp"
#include "semitree/formula.hpp"

using namespace semitree;
using semitree::test::mk;

namespace {

bool eval(const std::string& text, const std::vector<Node>& tuple) {
  return eval_formula(parse_formula(text).formula, tuple);
}

}  // namespace

TEST_CASE("variables are collected in order of first appearance") {
  ParsedFormula f = parse_formula("y < x & C(z, x w)");
  CHECK(f.variables == std::vector<std::string>{"y", "x", "z", "w"});
}

TEST_CASE("infix atoms and argument order") {
  const Node deep = mk({}, "2");
  const Node shallow = mk({}, "1");
  const Node side = mk({"1/2"}, "1");

  CHECK(eval("x < y", {deep, shallow}));
  CHECK_FALSE(eval("x > y", {deep, shallow}));
  // "y" appears first, so it binds to the first tuple entry.
  CHECK(eval("y > x", {shallow, deep}));
  CHECK(eval("x <= x", {deep, deep}));
  CHECK(eval("x = y", {deep, deep}));
  CHECK(eval("x == y", {deep, deep}));
  CHECK(eval("x != y", {deep, shallow}));
  CHECK(eval("x || y", {deep, side}));
  CHECK_FALSE(eval("x || y", {deep, shallow}));
}

TEST_CASE("functional atoms use writing order") {
  // C(z, x y): z departs before x and y separate; tuple entries bind to
  // variables in order of first appearance
  const Node outsider = mk({"1/2"}, "1");
  const Node p = mk({}, "1");
  const Node q = mk({"3/4"}, "1");
  CHECK(eval("C(z, x y)", {outsider, p, q}));
  CHECK_FALSE(eval("C(z, x y)", {p, outsider, q}));
  CHECK(eval("B(x, y, z)", {mk({}, "3"), mk({}, "2"), mk({}, "1")}));
  CHECK(eval("R(x, y, z)", {mk({}, "3"), mk({}, "2"), mk({}, "1")}));
  CHECK(eval("D(x, y, u, v)",
             {mk({}, "3"), mk({"5/2"}, "3"), mk({"1/2"}, "3"), mk({"1/2", "3/2"}, "3")}));
}

TEST_CASE("precedence: & binds tighter than |, ! tighter than &") {
  const Node deep = mk({}, "2");
  const Node shallow = mk({}, "1");
  // (false & anything) | true
  CHECK(eval("y < x & y < x | x < y", {deep, shallow}));
  // !(x < y) parses as (!x<y); with the parenthesized form both work
  CHECK_FALSE(eval("!x < y & x < y", {deep, shallow}));
  CHECK(eval("!(x < y) | x < y", {deep, shallow}));
  CHECK(eval("!x = y", {deep, shallow}));
}

TEST_CASE("double pipe is incomparability, single pipe is disjunction") {
  const Node deep = mk({}, "2");
  const Node side = mk({"1/2"}, "1");
  CHECK(eval("x || y", {deep, side}));
  CHECK(eval("x < y | x || y", {deep, side}));
  ParsedFormula f = parse_formula("x || y | y < x");
  CHECK(f.formula.kind == FormulaKind::Or);
}

TEST_CASE("chain evaluation reduces relations to their order parts") {
  QfFormula betw = parse_formula("B(x, y, z)").formula;
  CHECK(eval_formula_on_chain(betw, {Rat(1), Rat(2), Rat(3)}));
  CHECK(eval_formula_on_chain(betw, {Rat(3), Rat(2), Rat(1)}));
  CHECK_FALSE(eval_formula_on_chain(betw, {Rat(2), Rat(1), Rat(3)}));

  QfFormula perp = parse_formula("x || y").formula;
  CHECK_FALSE(eval_formula_on_chain(perp, {Rat(1), Rat(2)}));
  QfFormula c = parse_formula("C(z, x y)").formula;
  CHECK_FALSE(eval_formula_on_chain(c, {Rat(1), Rat(2), Rat(3)}));

  // R keeps its comparability disjuncts on a chain
  QfFormula r = parse_formula("R(x, y, z)").formula;
  CHECK(eval_formula_on_chain(r, {Rat(1), Rat(2), Rat(3)}));
}

TEST_CASE("round trip through formula_to_string") {
  for (const std::string& text :
       {std::string("x < y & y < z | !(x || z)"), std::string("C(z, x y) & x != w"),
        std::string("B(x, y, z) | D(x, y, u, v)")}) {
    ParsedFormula f = parse_formula(text);
    std::string printed = formula_to_string(f.formula, f.variables);
    ParsedFormula again = parse_formula(printed);
    CHECK(again.variables == f.variables);
    CHECK(formula_to_string(again.formula, again.variables) == printed);
  }
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_formula(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_formula("x <"), std::invalid_argument);
  CHECK_THROWS_AS(parse_formula("x << y"), std::invalid_argument);
  CHECK_THROWS_AS(parse_formula("C(z, x)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_formula("B(x, y)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_formula("(x < y"), std::invalid_argument);
  CHECK_THROWS_AS(parse_formula("x < y)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_formula("Q(x, y, z)"), std::invalid_argument);
}

TEST_CASE("evaluation arity errors") {
  QfFormula f = parse_formula("x < y").formula;
  CHECK_THROWS_AS(eval_formula(f, {mk({}, "1")}), std::invalid_argument);
}
