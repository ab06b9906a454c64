#include "cordial/tree_labelling.hpp"

#include <gtest/gtest.h>

#include "cordial/closed_forms.hpp"
#include "cordial/solver.hpp"

namespace cordial {
namespace {

std::int64_t signed_v(const LabellingStats& s) {
  return static_cast<std::int64_t>(s.v0) - static_cast<std::int64_t>(s.v1);
}

void expect_optimal(const Graph& t) {
  const std::size_t n = t.vertex_count();
  const auto s = stats(t, tree_optimal_labelling(t));
  EXPECT_EQ(signed_v(s), static_cast<std::int64_t>(n % 2));
  EXPECT_EQ(s.delta_e, 1 - n % 2);
  EXPECT_EQ(s.delta_v + s.delta_e, 1u);
}

TEST(TreeLabelling, SingleVertexAndEdge) {
  EXPECT_EQ(tree_optimal_labelling(empty_graph(1)).to_string(), "0");
  const auto f = tree_optimal_labelling(generate(FamilySpec::path(2)));
  EXPECT_EQ(f.to_string(), "01");
}

TEST(TreeLabelling, PathThree) {
  const Graph p3 = generate(FamilySpec::path(3));
  const auto s = stats(p3, tree_optimal_labelling(p3));
  EXPECT_EQ(s.delta_v, 1u);
  EXPECT_EQ(s.delta_e, 0u);
}

TEST(TreeLabelling, Stars) {
  for (std::size_t k = 0; k <= 20; ++k) expect_optimal(generate(FamilySpec::star(k)));
}

TEST(TreeLabelling, Paths) {
  for (std::size_t n = 1; n <= 40; ++n) expect_optimal(generate(FamilySpec::path(n)));
}

TEST(TreeLabelling, RandomTrees) {
  for (std::size_t n = 1; n <= 80; ++n)
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      SCOPED_TRACE(testing::Message() << "n=" << n << " seed=" << seed);
      expect_optimal(random_tree(n, seed));
    }
}

TEST(TreeLabelling, LargeTree) { expect_optimal(random_tree(5000, 3)); }

TEST(TreeLabelling, AgreesWithSolverAndClosedForm) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 2 + seed % 15;
    const Graph t = random_tree(n, seed);
    const auto r = solve_exact(t);
    const auto cf = closed_form_tree(n);
    EXPECT_EQ(static_cast<std::int64_t>(r.d1), cf.d1.value());
    EXPECT_EQ(static_cast<std::int64_t>(r.d2), cf.d2.value());
  }
}

TEST(TreeLabelling, RejectsNonTrees) {
  EXPECT_THROW(tree_optimal_labelling(generate(FamilySpec::cycle(5))), StructureError);
  EXPECT_THROW(tree_optimal_labelling(empty_graph(3)), StructureError);
  EXPECT_THROW(tree_optimal_labelling(Graph{}), StructureError);
}

}  // namespace
}  // namespace cordial
