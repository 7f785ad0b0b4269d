#include <doctest.h>

#include "helpers.hpp"
#include "semitree/axioms.hpp"

using namespace semitree;

TEST_CASE("axiom suite passes on a moderate randomized run") {
  AxiomReport report = run_axiom_suite(300, 0);
  REQUIRE(!report.checks.empty());
  for (const AxiomCheck& c : report.checks) {
    CHECK_MESSAGE(c.violations == 0, c.name, ": ", c.first_counterexample);
    CHECK(c.samples > 0);
  }
  CHECK(report.all_passed());
}

TEST_CASE("the report names every check") {
  AxiomReport report = run_axiom_suite(50, 1);
  std::string text = axiom_report_to_string(report);
  for (const AxiomCheck& c : report.checks) {
    CHECK(text.find(c.name) != std::string::npos);
  }
  CHECK(text.find("ok") != std::string::npos);
  CHECK(text.find("VIOLATED") == std::string::npos);
}

TEST_CASE("closed-form C agrees with the witness-based search") {
  CHECK(count_rel_C_oracle_disagreements(500, 0) == 0);
  CHECK(count_rel_C_oracle_disagreements(500, 12345) == 0);
}

TEST_CASE("negated betweenness matches its witness identity") {
  CHECK(count_negB_identity_disagreements(500, 0) == 0);
  CHECK(count_negB_identity_disagreements(500, 6789) == 0);
}

TEST_CASE("different seeds change the sampled stream but not the outcome") {
  AxiomReport a = run_axiom_suite(100, 2);
  AxiomReport b = run_axiom_suite(100, 3);
  CHECK(a.all_passed());
  CHECK(b.all_passed());
  CHECK(a.checks.size() == b.checks.size());
}
