#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "toughlab/error.hpp"
#include "toughlab/families.hpp"
#include "toughlab/mixing.hpp"

using namespace toughlab;

namespace {

// Colex labels of the four 2-subsets of {0..4} containing 0.
const VertexSet kPetersenStar{0, 1, 3, 6};

}  // namespace

TEST(MixingCheck, PetersenIndependentSetIsTight) {
  const MixingCheck c = mixing_check(petersen(), kPetersenStar, kPetersenStar);
  EXPECT_EQ(c.e_ab, 0);
  EXPECT_NEAR(c.expected, 4.8, 1e-12);
  EXPECT_NEAR(c.bound, 4.8, 1e-9);
  EXPECT_NEAR(c.slack, 0.0, 1e-9);
}

TEST(MixingCheck, EmptyAndFullSets) {
  for (const Graph& g : {petersen(), cycle(7), hypercube(3)}) {
    const MixingCheck empty = mixing_check(g, VertexSet{}, g.vertices());
    EXPECT_EQ(empty.e_ab, 0);
    EXPECT_EQ(empty.expected, 0.0);
    EXPECT_EQ(empty.bound, 0.0);
    EXPECT_EQ(empty.slack, 0.0);
    const MixingCheck full = mixing_check(g, g.vertices(), g.vertices());
    EXPECT_EQ(full.e_ab, 2L * g.num_edges());
    EXPECT_DOUBLE_EQ(full.expected, 2.0 * g.num_edges());
    EXPECT_EQ(full.bound, 0.0);
    EXPECT_EQ(full.slack, 0.0);
  }
}

TEST(MixingCheckSingle, Examples) {
  const MixingCheck pet = mixing_check_single(petersen(), kPetersenStar);
  EXPECT_EQ(pet.e_ab, 0);
  EXPECT_NEAR(pet.expected, 2.4, 1e-12);
  EXPECT_NEAR(pet.bound, 2.4, 1e-9);
  EXPECT_NEAR(pet.slack, 0.0, 1e-9);

  const MixingCheck empty = mixing_check_single(petersen(), VertexSet{});
  EXPECT_EQ(empty.slack, 0.0);

  const MixingCheck c6 = mixing_check_single(cycle(6), VertexSet{0, 1, 2});
  EXPECT_EQ(c6.e_ab, 2);
  EXPECT_NEAR(c6.expected, 1.5, 1e-12);
  EXPECT_NEAR(c6.bound, 1.5, 1e-9);
  EXPECT_NEAR(c6.slack, 1.0, 1e-9);
}

TEST(MixingCheckSingle, IsHalfThePairedForm) {
  std::mt19937_64 rng(5);
  for (const Graph& g : {petersen(), kneser(7, 3), random_regular(14, 5, 3)}) {
    const MixingVerifier v(g);
    for (int i = 0; i < 500; ++i) {
      const VertexSet a(rng() & g.vertices().bits());
      EXPECT_NEAR(v.check_single(a).slack, v.check(a, a).slack / 2.0, 1e-9);
    }
  }
}

TEST(MixingCheck, RefusesIrregular) {
  const std::vector<Edge> path{{0, 1}, {1, 2}};
  try {
    mixing_check(Graph::from_edge_list(3, path), VertexSet{0}, VertexSet{1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotRegular);
  }
}

TEST(ExhaustiveMixing, Examples) {
  const MixingCheck pet = exhaustive_mixing_verify(petersen());
  EXPECT_GE(pet.slack, -1e-9);
  EXPECT_LE(pet.slack, 1e-9);
  EXPECT_GE(exhaustive_mixing_verify(complete(4)).slack, -1e-9);
  EXPECT_GE(exhaustive_mixing_verify(cycle(4)).slack, -1e-9);
  try {
    exhaustive_mixing_verify(cycle(11));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLarge);
  }
}

TEST(ExhaustiveMixing, EdgeCountsMatchOracle) {
  const Graph g = circulant(8, {1, 2});
  const MixingVerifier v(g);
  for (std::uint64_t a = 0; a < 256; a += 7)
    for (std::uint64_t b = 0; b < 256; b += 5)
      EXPECT_EQ(v.check(VertexSet(a), VertexSet(b)).e_ab, oracle::naive_e_between(g, a, b));
}

TEST(SampledMixing, DeterministicPerSeed) {
  const Graph g = kneser(7, 3);
  const MixingCheck a = sampled_mixing_verify(g, 1, 99);
  const MixingCheck b = sampled_mixing_verify(g, 1, 99);
  EXPECT_EQ(a.a, b.a);
  EXPECT_EQ(a.b, b.b);
  const MixingCheck c = sampled_mixing_verify(g, 1, 100);
  EXPECT_FALSE(a.a == c.a && a.b == c.b);
  EXPECT_THROW(sampled_mixing_verify(g, 0, 1), Error);
}

TEST(SampledMixing, LargeSampleHolds) {
  for (const Graph& g : {kneser(7, 3), hypercube(6), random_regular(14, 5, 12)})
    EXPECT_GE(sampled_mixing_verify(g, 100000, 42).slack, -1e-9);
}

TEST(ComponentCountBound, Examples) {
  EXPECT_NEAR(component_count_bound(petersen()), 4.0, 1e-9);
  EXPECT_NEAR(component_count_bound(complete(5)), 1.0, 1e-9);
  EXPECT_NEAR(component_count_bound(complete_bipartite(3, 3)), 3.0, 1e-9);
}

TEST(VerifyComponentBound, Examples) {
  const ComponentBoundCheck pet = verify_component_bound(petersen());
  EXPECT_TRUE(pet.holds);
  EXPECT_EQ(pet.max_components, 4);
  EXPECT_NEAR(pet.bound, 4.0, 1e-9);
  EXPECT_TRUE(pet.replay_independent);
  EXPECT_GE(*pet.min_replay_slack, -1e-9);

  const ComponentBoundCheck c6 = verify_component_bound(cycle(6));
  EXPECT_TRUE(c6);
  EXPECT_NEAR(c6.bound, 3.0, 1e-9);
  EXPECT_EQ(c6.max_components, 3);

  const ComponentBoundCheck k4 = verify_component_bound(complete(4));
  EXPECT_TRUE(k4);
  EXPECT_EQ(k4.max_components, 0);
  EXPECT_FALSE(k4.min_replay_slack);

  EXPECT_THROW(verify_component_bound(cycle(13)), Error);
}

TEST(VerifyComponentBound, MaxMatchesOracle) {
  for (const Graph& g : {petersen(), cycle(9), hypercube(3), circulant(10, {1, 3}), random_regular(12, 3, 5)})
    EXPECT_EQ(verify_component_bound(g).max_components, oracle::naive_max_components(g));
}
