#include "cordial/solver.hpp"

#include <gtest/gtest.h>

#include "cordial/graph.hpp"
#include "oracle/naive_solver.hpp"
#include "support/generators.hpp"

namespace cordial {
namespace {

void expect_consistent(const Graph& g, const ExactResult& r) {
  const auto s1 = stats(g, r.d1_witness);
  EXPECT_EQ(s1.delta_v + s1.delta_e, r.d1);
  const auto s2 = stats(g, r.d2_witness);
  EXPECT_LE(s2.delta_v, 1u);
  EXPECT_EQ(s2.delta_e, r.d2);
  EXPECT_EQ(r.cordial, r.d2 <= 1);
  EXPECT_EQ(r.d1_witness[0], 0);
  EXPECT_EQ(r.d2_witness[0], 0);
  EXPECT_EQ(r.labellings_visited, std::uint64_t{1} << (g.vertex_count() - 1));
}

TEST(SolveExact, CompleteTen) {
  const Graph g = generate(FamilySpec::complete(10));
  const auto r = solve_exact(g);
  EXPECT_EQ(r.d1, 5u);
  EXPECT_EQ(r.d2, 5u);
  expect_consistent(g, r);
}

TEST(SolveExact, SixCycle) {
  const auto r = solve_exact(generate(FamilySpec::cycle(6)));
  EXPECT_EQ(r.d1, 2u);
  EXPECT_EQ(r.d2, 2u);
  EXPECT_FALSE(r.cordial);
}

TEST(SolveExact, PathFive) {
  const auto r = solve_exact(generate(FamilySpec::path(5)));
  EXPECT_EQ(r.d1, 1u);
  EXPECT_EQ(r.d2, 0u);
}

TEST(SolveExact, SingleVertex) {
  const Graph g = empty_graph(1);
  const auto r = solve_exact(g);
  EXPECT_EQ(r.d1, 1u);
  EXPECT_EQ(r.d2, 0u);
  EXPECT_EQ(r.d1_witness.to_string(), "0");
  expect_consistent(g, r);
}

TEST(SolveExact, CapacityLimits) {
  EXPECT_THROW(solve_exact(Graph{}), CapacityError);
  EXPECT_THROW(solve_exact(empty_graph(31)), CapacityError);
  EXPECT_THROW(is_cordial(empty_graph(31)), CapacityError);
  EXPECT_THROW(is_uniformly_cordial(Graph{}), CapacityError);
}

TEST(SolveExact, MatchesNaiveOracle) {
  Rng rng(8128);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_graph(uniform_between(rng, 1, 12), rng);
    const auto expected = oracle::naive_solve(g);
    for (unsigned threads : {1u, 2u, 8u}) {
      const auto r = solve_exact(g, {threads});
      ASSERT_EQ(r.d1, expected.d1) << "trial " << trial << " threads " << threads;
      ASSERT_EQ(r.d2, expected.d2);
      ASSERT_EQ(r.d1_witness, expected.d1_witness);
      ASSERT_EQ(r.d2_witness, expected.d2_witness);
      expect_consistent(g, r);
    }
  }
}

TEST(SolveExact, DeterministicAcrossThreadCounts) {
  Rng rng(17);
  for (int trial = 0; trial < 4; ++trial) {
    const Graph g = random_graph(18, rng);
    const auto base = solve_exact(g, {1});
    for (unsigned threads : {2u, 3u, 8u, 64u}) {
      const auto r = solve_exact(g, {threads});
      EXPECT_EQ(r.d1, base.d1);
      EXPECT_EQ(r.d2, base.d2);
      EXPECT_EQ(r.d1_witness, base.d1_witness);
      EXPECT_EQ(r.d2_witness, base.d2_witness);
      EXPECT_EQ(r.labellings_visited, base.labellings_visited);
    }
  }
}

TEST(SolveExact, ParityAndFriendlyBridge) {
  Rng rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = random_graph(uniform_between(rng, 1, 14), rng);
    const auto r = solve_exact(g);
    const std::size_t n = g.vertex_count(), m = g.edge_count();
    EXPECT_EQ(r.d2 % 2, m % 2);
    EXPECT_EQ(r.d1 % 2, (n + m) % 2);
    if (n % 2 == 0)
      EXPECT_LE(r.d1, r.d2);
    else
      EXPECT_LE(r.d1, r.d2 + 1);
  }
}

TEST(IsCordial, KnownCases) {
  EXPECT_TRUE(is_cordial(generate(FamilySpec::complete(3))));
  EXPECT_FALSE(is_cordial(generate(FamilySpec::complete(4))));
  EXPECT_FALSE(is_cordial(generate(FamilySpec::cycle(6))));
  EXPECT_TRUE(is_cordial(generate(FamilySpec::cycle(8))));
}

TEST(IsCordial, AgreesWithSolver) {
  Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_graph(uniform_between(rng, 1, 12), rng);
    const bool expected = solve_exact(g).d2 <= 1;
    EXPECT_EQ(is_cordial(g), expected);
    EXPECT_EQ(is_cordial(g, {4}), expected);
  }
}

TEST(IsUniformlyCordial, KnownCases) {
  EXPECT_TRUE(is_uniformly_cordial(generate(FamilySpec::complete(3))));
  EXPECT_TRUE(is_uniformly_cordial(generate(FamilySpec::star(3))));
  EXPECT_FALSE(is_uniformly_cordial(generate(FamilySpec::star(4))));
}

TEST(IsUniformlyCordial, AgreesWithFriendlyEnumeration) {
  Rng rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_graph(uniform_between(rng, 1, 10), rng);
    const std::size_t n = g.vertex_count();
    std::size_t worst = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      const auto s = stats(g, Labelling::from_mask(mask, n));
      if (s.delta_v <= 1) worst = std::max(worst, s.delta_e);
    }
    EXPECT_EQ(is_uniformly_cordial(g), worst <= 1);
    EXPECT_EQ(is_uniformly_cordial(g, {3}), worst <= 1);
  }
}

TEST(LexKey, OrdersLikeBitStrings) {
  Rng rng(2);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = uniform_between(rng, 1, 30);
    const auto a = static_cast<std::uint32_t>(uniform_below(rng, std::uint64_t{1} << n));
    const auto b = static_cast<std::uint32_t>(uniform_below(rng, std::uint64_t{1} << n));
    EXPECT_EQ(detail::lex_key(a, n) < detail::lex_key(b, n),
              Labelling::from_mask(a, n) < Labelling::from_mask(b, n));
  }
}

}  // namespace
}  // namespace cordial
