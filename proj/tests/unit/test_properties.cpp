#include <gtest/gtest.h>

#include "properties.hpp"

// Same suites as the acceptance binary, on other seeds.

TEST(Properties, GroupAxioms) {
  props::Result r = props::group_axioms(1000, 101);
  EXPECT_TRUE(r.ok) << r.detail;
}

TEST(Properties, ConjugateSupport) {
  props::Result r = props::conjugate_support(1000, 102);
  EXPECT_TRUE(r.ok) << r.detail;
}

TEST(Properties, CommutatorSupport) {
  props::Result r = props::commutator_support(200, 103);
  EXPECT_TRUE(r.ok) << r.detail;
}

TEST(Properties, WrapSandwich) {
  props::Result r = props::wrap_sandwich(10'000, 104);
  EXPECT_TRUE(r.ok) << r.detail;
}

TEST(Properties, ConjugationInvariance) {
  props::Result r = props::conjugation_invariance(100, 105);
  EXPECT_TRUE(r.ok) << r.detail;
}

TEST(Properties, SearchWitnesses) {
  props::Result r = props::search_witnesses(106);
  EXPECT_TRUE(r.ok) << r.detail;
}
