#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "semitree/engine.hpp"
#include "semitree/enumeration.hpp"

using namespace semitree;

TEST_CASE("substructure counts for small n") {
  CHECK(enumerate_age_structures(1).size() == 1);
  CHECK(enumerate_age_structures(2).size() == 2);
  CHECK(enumerate_age_structures(3).size() == 6);
}

TEST_CASE("labeled count at n = 3") {
  // 6 chains + 3 V's (choice of top) + 6 chain-plus-isolated-point
  // + 3 single-C antichains (choice of outsider; C is symmetric in the pair)
  CHECK(enumerate_labeled_age_structures(3).size() == 18);
}

TEST_CASE("representatives validate, embed, and are pairwise non-equivalent") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<FiniteStructure> reps = enumerate_age_structures(n);
    std::set<std::string> keys;
    for (const FiniteStructure& s : reps) {
      CHECK(validate(s).empty());
      CHECK(embed_structure(s).ok());
      CHECK(keys.insert(s.canonical_key()).second);
    }
  }
}

TEST_CASE("labeled structures carry matching realizations") {
  for (const LabeledStructure& ls : enumerate_labeled_age_structures(3)) {
    REQUIRE(ls.realization.size() == 3);
    CHECK(induced_structure(ls.realization) == ls.structure);
  }
}

TEST_CASE("classes are closed under induced substructures") {
  // every 2-point substructure of a 3-point representative appears at n = 2
  std::set<std::string> keys2;
  for (const FiniteStructure& s : enumerate_age_structures(2))
    keys2.insert(s.canonical_key());

  for (const FiniteStructure& s : enumerate_age_structures(3)) {
    EmbedResult r = embed_structure(s);
    REQUIRE(r.ok());
    const std::vector<Node>& pts = *r.nodes;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        FiniteStructure sub = induced_structure({pts[i], pts[j]});
        CHECK(keys2.count(sub.canonical_key()) == 1);
      }
  }
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(enumerate_age_structures(-1), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_age_structures(9, 6), std::invalid_argument);
}
