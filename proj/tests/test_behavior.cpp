#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "semitree/behavior.hpp"

using namespace semitree;
using semitree::test::mk;

namespace {

using P = PairType;

std::pair<P, P> key(const Behavior& b) {
  return {b.apply(P::LT), b.apply(P::PerpBefore)};
}

}  // namespace

TEST_CASE("pair type plumbing") {
  CHECK(reverse_pair_type(P::LT) == P::GT);
  CHECK(reverse_pair_type(P::GT) == P::LT);
  CHECK(reverse_pair_type(P::PerpBefore) == P::PerpAfter);
  CHECK(reverse_pair_type(P::PerpAfter) == P::PerpBefore);

  Behavior b = Behavior::symmetric(P::LT, P::PerpBefore);
  CHECK(b.is_symmetric());
  CHECK(b.apply(P::GT) == P::GT);
  CHECK(b.apply(P::PerpAfter) == P::PerpAfter);
}

TEST_CASE("exactly ten symmetric behaviors survive at k = 3") {
  std::vector<SurvivingBehavior> survivors = enumerate_surviving_behaviors();
  REQUIRE(survivors.size() == 10);

  std::set<std::pair<P, P>> expected = {
      // order-preserving
      {P::LT, P::PerpBefore},
      {P::LT, P::PerpAfter},
      // thin: incomparability collapses to an order
      {P::LT, P::LT},
      {P::LT, P::GT},
      {P::GT, P::LT},
      {P::GT, P::GT},
      // flat: comparability opens up
      {P::PerpBefore, P::PerpBefore},
      {P::PerpBefore, P::PerpAfter},
      {P::PerpAfter, P::PerpBefore},
      {P::PerpAfter, P::PerpAfter},
  };
  std::set<std::pair<P, P>> got;
  for (const SurvivingBehavior& s : survivors) {
    CHECK(got.insert(key(s.behavior)).second);
    CHECK(s.behavior.is_symmetric());
    switch (s.cls) {
      case BehaviorClass::OrderPreserving:
        CHECK(s.behavior.apply(P::LT) == P::LT);
        CHECK(s.behavior.apply(P::GT) == P::GT);
        break;
      case BehaviorClass::Thin:
        CHECK((s.behavior.apply(P::PerpBefore) == P::LT ||
               s.behavior.apply(P::PerpBefore) == P::GT));
        break;
      case BehaviorClass::Flat:
        CHECK((s.behavior.apply(P::LT) == P::PerpBefore ||
               s.behavior.apply(P::LT) == P::PerpAfter));
        break;
    }
  }
  CHECK(got == expected);
}

TEST_CASE("mixing patterns are rejected with certificates") {
  const std::pair<P, P> rejected[] = {
      {P::PerpBefore, P::LT},
      {P::PerpBefore, P::GT},
      {P::GT, P::PerpBefore},
      {P::GT, P::PerpAfter},
  };
  for (auto [lt_img, pb_img] : rejected) {
    Behavior b = Behavior::symmetric(lt_img, pb_img);
    BehaviorCheck check = behavior_consistent(b, 3);
    CHECK_FALSE(check.consistent);
    REQUIRE(check.certificate.has_value());
    const BehaviorCertificate& cert = *check.certificate;
    CHECK(validate(cert.structure).empty());
    CHECK(cert.extension.size() == static_cast<size_t>(cert.structure.n));
    CHECK_FALSE(cert.reason.empty());
  }
}

TEST_CASE("asymmetric tables fail the consistency check") {
  Behavior lopsided{{P::LT, P::LT, P::PerpBefore, P::PerpAfter}};
  CHECK_FALSE(lopsided.is_symmetric());
  BehaviorCheck check = behavior_consistent(lopsided, 3);
  CHECK_FALSE(check.consistent);
  REQUIRE(check.certificate.has_value());
}

TEST_CASE("survivors also pass the k = 4 battery") {
  for (const SurvivingBehavior& s : enumerate_surviving_behaviors()) {
    CHECK(behavior_consistent(s.behavior, 4).consistent);
  }
}

TEST_CASE("orbit_of sorts one-point extensions over a parameter") {
  const Node a = mk({"1/2"}, "2");
  CHECK(orbit_of(mk({"1/2"}, "3"), a) == OrbitLabel::BelowA);
  CHECK(orbit_of(mk({"1/2"}, "1"), a) == OrbitLabel::AboveA);
  CHECK(orbit_of(mk({}, "1/3"), a) == OrbitLabel::AboveA);

  // p turns where a goes straight: side fixed by the hint
  const Node p = mk({"1/2", "3/2"}, "2");
  CHECK(orbit_of(p, a) == OrbitLabel::PerpAfterA);
  CHECK(orbit_of(p, a, PrecHint::TurnSideBefore) == OrbitLabel::PerpBeforeA);
  // a turns where p goes straight: the mirror case
  const Node q = mk({}, "2");
  CHECK(orbit_of(q, a) == OrbitLabel::PerpBeforeA);
  CHECK(orbit_of(q, a, PrecHint::TurnSideBefore) == OrbitLabel::PerpAfterA);

  CHECK_THROWS_AS(orbit_of(a, a), std::invalid_argument);
}

TEST_CASE("one constant analysis") {
  std::vector<OneConstantCheck> checks = one_constant_checks();
  REQUIRE(!checks.empty());
  bool saw_realizable = false, saw_unrealizable = false;
  for (const OneConstantCheck& c : checks) {
    CHECK(c.pass);
    CHECK(c.expected_realizable == c.observed_realizable);
    (c.expected_realizable ? saw_realizable : saw_unrealizable) = true;
  }
  CHECK(saw_realizable);
  CHECK(saw_unrealizable);
  std::string report = one_constant_report(checks);
  for (const OneConstantCheck& c : checks) {
    CHECK(report.find(c.name) != std::string::npos);
  }
}
