#include <gtest/gtest.h>

#include <cmath>

#include "toughlab/bounds.hpp"
#include "toughlab/error.hpp"
#include "toughlab/families.hpp"

using namespace toughlab;

TEST(BoundFormulas, Alon) {
  EXPECT_NEAR(alon_bound(3, 2.0), -1.0 / 30.0, 1e-15);
  EXPECT_NEAR(alon_bound(5, 5.0), -1.0 / 6.0, 1e-15);
  EXPECT_NEAR(alon_bound(4, 1.0), 11.0 / 15.0, 1e-15);
}

TEST(BoundFormulas, Brouwer) {
  EXPECT_DOUBLE_EQ(brouwer_bound(3, 2.0), -0.5);
  EXPECT_DOUBLE_EQ(brouwer_bound(4, 4.0), -1.0);
  EXPECT_DOUBLE_EQ(brouwer_bound(6, 2.0), 1.0);
}

TEST(BoundFormulas, Gu) {
  EXPECT_NEAR(gu_bound(3, 2.0), 0.085786, 1e-6);
  EXPECT_DOUBLE_EQ(gu_bound(7, 7.0), 1.0 - std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(gu_bound(6, 3.0), 2.0 - std::sqrt(2.0));
}

TEST(BoundFormulas, Theorem) {
  EXPECT_DOUBLE_EQ(theorem_bound(3, 2.0), 0.5);
  EXPECT_DOUBLE_EQ(theorem_bound(3, 3.0), 0.0);
  EXPECT_DOUBLE_EQ(theorem_bound(4, 1.0), 3.0);
}

TEST(BoundFormulas, RejectBadArguments) {
  for (auto f : {alon_bound, brouwer_bound, gu_bound, theorem_bound}) {
    try {
      f(3, 0.0);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::NonpositiveLambda);
    }
    EXPECT_THROW(f(0, 1.0), Error);
  }
}

TEST(BoundFormulas, OrderingAndMonotonicity) {
  for (int d = 1; d <= 20; ++d) {
    for (double lambda = 0.05; lambda <= d; lambda += 0.05) {
      EXPECT_LT(brouwer_bound(d, lambda), gu_bound(d, lambda));
      EXPECT_LT(gu_bound(d, lambda), theorem_bound(d, lambda));
      EXPECT_LT(alon_bound(d, lambda), theorem_bound(d, lambda));
      EXPECT_GT(theorem_bound(d, lambda), theorem_bound(d, lambda + 0.01));
    }
  }
}

TEST(VerifyTheorem, Petersen) {
  const BoundReport r = verify_theorem(petersen());
  EXPECT_EQ(r.d, 3);
  EXPECT_NEAR(r.lambda, 2.0, 1e-9);
  EXPECT_NEAR(r.theorem, 0.5, 1e-9);
  ASSERT_TRUE(r.toughness);
  EXPECT_EQ(r.toughness->t, Rational(4, 3));
  EXPECT_NEAR(*r.slack, 5.0 / 6.0, 1e-9);
  EXPECT_NEAR(*r.tight_gap, 1.0 / 6.0, 1e-9);
  EXPECT_FALSE(r.violation);
}

TEST(VerifyTheorem, CycleFour) {
  const BoundReport r = verify_theorem(cycle(4));
  EXPECT_EQ(r.d, 2);
  EXPECT_NEAR(r.lambda, 2.0, 1e-9);
  EXPECT_NEAR(r.theorem, 0.0, 1e-9);
  EXPECT_EQ(r.toughness->t, Rational(1));
  EXPECT_NEAR(*r.slack, 1.0, 1e-9);
}

TEST(VerifyTheorem, CompleteGraphHasNoToughness) {
  const BoundReport r = verify_theorem(complete(5));
  EXPECT_FALSE(r.toughness);
  EXPECT_FALSE(r.slack);
  EXPECT_FALSE(r.tight_gap);
  EXPECT_FALSE(r.violation);
  EXPECT_NEAR(r.theorem, 3.0, 1e-9);
}

TEST(VerifyTheorem, RefusesIrregularOrDisconnected) {
  const std::vector<Edge> path{{0, 1}, {1, 2}};
  const std::vector<Edge> two_triangles{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}};
  try {
    verify_theorem(Graph::from_edge_list(3, path));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotRegular);
  }
  try {
    verify_theorem(Graph::from_edge_list(6, two_triangles));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Disconnected);
  }
}

TEST(TightnessGap, Examples) {
  EXPECT_NEAR(tightness_gap(petersen()), 1.0 / 6.0, 1e-9);
  EXPECT_NEAR(tightness_gap(cycle(4)), 0.0, 1e-9);
  EXPECT_NEAR(tightness_gap(complete_bipartite(3, 3)), 0.0, 1e-9);
  try {
    tightness_gap(complete(4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ToughnessUndefined);
  }
}

TEST(TightnessGap, KneserSevenThreeMeetsDOverLambda) {
  // Eigenvalues of K(7,3) are 4, -3, 2, -1, so d / lambda = 4/3 = t.
  EXPECT_NEAR(tightness_gap(kneser(7, 3), {kMaxVertices}), 0.0, 1e-9);
}
