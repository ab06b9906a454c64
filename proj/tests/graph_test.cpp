#include "cordial/graph.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <vector>

#include "support/generators.hpp"

namespace cordial {
namespace {

std::size_t degree_sum(const Graph& g) {
  std::size_t sum = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) sum += g.degree(v);
  return sum;
}

void expect_well_formed(const Graph& g) {
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    EXPECT_FALSE(g.adjacent(u, u));
    for (std::size_t v = 0; v < g.vertex_count(); ++v) EXPECT_EQ(g.adjacent(u, v), g.adjacent(v, u));
  }
  EXPECT_EQ(degree_sum(g), 2 * g.edge_count());
  // Tail bits of each row stay clear.
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    const auto row = g.row(u);
    const std::size_t tail = row.size() * kWordBits - g.vertex_count();
    if (tail > 0) {
      EXPECT_EQ(row.back() >> (kWordBits - tail), 0u);
    }
  }
}

TEST(Generate, CycleFour) {
  const Graph g = generate(FamilySpec::cycle(4));
  EXPECT_EQ(g.vertex_count(), 4u);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 3}}));
}

TEST(Generate, WheelHasTwoNMinusTwoEdges) {
  const Graph g = generate(FamilySpec::wheel(5));
  EXPECT_EQ(g.vertex_count(), 5u);
  EXPECT_EQ(g.edge_count(), 8u);
  EXPECT_EQ(g.degree(4), 4u);  // hub is the last vertex
}

TEST(Generate, FanVertexAndEdgeCounts) {
  const Graph g = generate(FamilySpec::fan(2, 3));
  EXPECT_EQ(g.vertex_count(), 5u);
  EXPECT_EQ(g.edge_count(), 8u);
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_TRUE(g.adjacent(1, 2));
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_FALSE(g.adjacent(3, 4));
  for (std::size_t u : {3u, 4u})
    for (std::size_t v : {0u, 1u, 2u}) EXPECT_TRUE(g.adjacent(u, v));
}

TEST(Generate, BipartiteTwoTwoIsFourCycle) {
  const Graph g = generate(FamilySpec::multipartite({2, 2}));
  EXPECT_EQ(g.vertex_count(), 4u);
  EXPECT_EQ(g.edge_count(), 4u);
  for (std::size_t v = 0; v < 4; ++v) EXPECT_EQ(g.degree(v), 2u);
  EXPECT_FALSE(g.adjacent(0, 1));
  EXPECT_FALSE(g.adjacent(2, 3));
}

TEST(Generate, RejectsInvalidParameters) {
  EXPECT_THROW(generate(FamilySpec::cycle(2)), ParameterError);
  EXPECT_THROW(generate(FamilySpec::wheel(3)), ParameterError);
  EXPECT_THROW(generate(FamilySpec::fan(0, 3)), ParameterError);
  EXPECT_THROW(generate(FamilySpec::fan(2, 0)), ParameterError);
  EXPECT_THROW(generate(FamilySpec::multipartite({})), ParameterError);
  EXPECT_THROW(generate(FamilySpec::multipartite({2, 0})), ParameterError);
  EXPECT_THROW(generate(FamilySpec::path(0)), ParameterError);
  EXPECT_THROW(generate(FamilySpec::complete(0)), ParameterError);
  try {
    generate(FamilySpec::cycle(2));
  } catch (const ParameterError& e) {
    EXPECT_NE(std::string(e.what()).find("n >= 3"), std::string::npos);
  }
}

TEST(Generate, EdgeCountFormulas) {
  for (std::size_t n = 1; n <= 20; ++n) {
    const Graph k = generate(FamilySpec::complete(n));
    EXPECT_EQ(k.edge_count(), n * (n - 1) / 2);
    expect_well_formed(k);
  }
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::size_t> parts(uniform_between(rng, 1, 5));
    for (auto& p : parts) p = uniform_between(rng, 1, 6);
    const Graph g = generate(FamilySpec::multipartite(parts));
    const std::size_t s = std::accumulate(parts.begin(), parts.end(), std::size_t{0});
    std::size_t sq = 0;
    for (auto p : parts) sq += p * p;
    EXPECT_EQ(g.edge_count(), (s * s - sq) / 2);
    expect_well_formed(g);
  }
}

TEST(Generate, StarMatchesOneByNMultipartite) {
  for (std::size_t n = 1; n <= 12; ++n)
    EXPECT_EQ(generate(FamilySpec::star(n)), generate(FamilySpec::multipartite({1, n}))) << "n=" << n;
  EXPECT_EQ(generate(FamilySpec::star(0)).vertex_count(), 1u);
}

TEST(Join, SmallExamples) {
  const Graph wheel = join(generate(FamilySpec::cycle(4)), empty_graph(1));
  EXPECT_EQ(wheel, generate(FamilySpec::wheel(5)));

  const Graph k2 = join(empty_graph(1), empty_graph(1));
  EXPECT_EQ(k2.edge_count(), 1u);
  EXPECT_TRUE(k2.adjacent(0, 1));

  const Graph k23 = join(empty_graph(2), empty_graph(3));
  EXPECT_EQ(k23, generate(FamilySpec::multipartite({2, 3})));
  EXPECT_EQ(k23.edge_count(), 6u);
}

TEST(Join, EmptyOperandIsIdentity) {
  const Graph c5 = generate(FamilySpec::cycle(5));
  EXPECT_EQ(join(c5, Graph{}), c5);
  EXPECT_EQ(join(Graph{}, c5), c5);
}

TEST(Join, EdgeCountProperty) {
  Rng rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph a = random_graph(uniform_below(rng, 10), rng);
    const Graph b = random_graph(uniform_below(rng, 10), rng);
    const Graph j = join(a, b);
    EXPECT_EQ(j.vertex_count(), a.vertex_count() + b.vertex_count());
    EXPECT_EQ(j.edge_count(), a.edge_count() + b.edge_count() + a.vertex_count() * b.vertex_count());
    expect_well_formed(j);
  }
}

TEST(Join, RejectsOversizedResult) {
  EXPECT_THROW(join(empty_graph(kMaxOrder), empty_graph(1)), SizeError);
}

TEST(RandomTree, SmallOrders) {
  EXPECT_EQ(random_tree(1, 5).edge_count(), 0u);
  const Graph k2 = random_tree(2, 5);
  EXPECT_EQ(k2.edge_count(), 1u);
  EXPECT_TRUE(k2.adjacent(0, 1));
  EXPECT_THROW(random_tree(0, 1), ParameterError);
}

TEST(RandomTree, EightVerticesSeed42) {
  const Graph t = random_tree(8, 42);
  EXPECT_EQ(t.vertex_count(), 8u);
  EXPECT_EQ(t.edge_count(), 7u);
  EXPECT_TRUE(is_connected(t));
}

TEST(RandomTree, AlwaysATreeAndDeterministic) {
  for (std::size_t n = 1; n <= 64; ++n)
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const Graph t = random_tree(n, seed);
      ASSERT_EQ(t.edge_count() + 1, n);
      ASSERT_TRUE(is_connected(t)) << "n=" << n << " seed=" << seed;
      if (seed < 3) {
        EXPECT_EQ(t, random_tree(n, seed));
      }
    }
}

TEST(FamilySpecText, RoundTrip) {
  const std::vector<FamilySpec> specs = {
      FamilySpec::path(3), FamilySpec::cycle(7), FamilySpec::multipartite({3, 1, 2}),
      FamilySpec::fan(2, 5), FamilySpec::join(FamilySpec::cycle(4), FamilySpec::complete(1)),
      FamilySpec::join(FamilySpec::join(FamilySpec::star(2), FamilySpec::path(1)),
                       FamilySpec::wheel(6))};
  for (const auto& s : specs) EXPECT_EQ(parse_family_spec(to_string(s)), s) << to_string(s);
  EXPECT_EQ(to_string(FamilySpec::fan(2, 5)), "fan:2,5");
  EXPECT_EQ(to_string(FamilySpec::join(FamilySpec::cycle(4), FamilySpec::complete(1))),
            "join(cycle:4,complete:1)");
}

TEST(FamilySpecText, RejectsGarbage) {
  EXPECT_THROW(parse_family_spec("cycle"), ParameterError);
  EXPECT_THROW(parse_family_spec("cycle:2"), ParameterError);
  EXPECT_THROW(parse_family_spec("blob:3"), ParameterError);
  EXPECT_THROW(parse_family_spec("join(cycle:4)"), ParameterError);
  EXPECT_THROW(parse_family_spec("cycle:4x"), ParameterError);
}

}  // namespace
}  // namespace cordial
