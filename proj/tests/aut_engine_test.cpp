#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fixset/aut_engine.hpp"
#include "fixset/corpus.hpp"
#include "fixset/graph_io.hpp"
#include "fixset/perm.hpp"
#include "fixset/products.hpp"

namespace fixset {
namespace {

TEST(AutomorphismGenerators, CompleteGraph) {
  const AutResult r = AutomorphismGenerators(NamedFamily(Family::kComplete, 4));
  EXPECT_EQ(GroupOrder(r.generators), 24);
  EXPECT_EQ(r.orbit_partition.cells().size(), 1u);
}

TEST(AutomorphismGenerators, FixingAnEndOfP3) {
  const Vertex f[] = {0};
  const AutResult r = AutomorphismGenerators(NamedFamily(Family::kPath, 3), f);
  EXPECT_TRUE(r.generators.empty());
  EXPECT_TRUE(r.orbit_partition.is_discrete());
}

TEST(AutomorphismGenerators, C4StabilizerOfAVertex) {
  const Vertex f[] = {0};
  const AutResult r = AutomorphismGenerators(NamedFamily(Family::kCycle, 4), f);
  EXPECT_EQ(GroupOrder(r.generators), 2);
  EXPECT_EQ(r.orbit_partition.cells(),
            (std::vector<std::vector<int>>{{0}, {1, 3}, {2}}));
}

TEST(AutomorphismGenerators, GeneratorsPreserveAdjacency) {
  const Graph g = NamedFamily(Family::kCycle, 9);
  const AutResult r = AutomorphismGenerators(g);
  for (const auto& p : r.generators.gens()) EXPECT_TRUE(IsAutomorphism(g, p));
  EXPECT_EQ(GroupOrder(r.generators), 18);
}

TEST(AutomorphismGenerators, LargeSymmetricGroups) {
  EXPECT_EQ(GroupOrder(AutomorphismGenerators(NamedFamily(Family::kEmpty, 12)).generators),
            BigInt(479001600));
  const Graph star = NamedFamily(Family::kStar, 30);
  const AutResult r = AutomorphismGenerators(star);
  BigInt f = 1;
  for (int i = 2; i <= 29; ++i) f *= i;
  EXPECT_EQ(GroupOrder(r.generators), f);
}

Graph Petersen() {
  return Graph::FromEdges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7},
                               {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

Graph Cube() {
  GraphBuilder b(8);
  for (Vertex v = 0; v < 8; ++v) {
    for (int bit = 0; bit < 3; ++bit) {
      if (v < (v ^ (1 << bit))) b.add_edge(v, v ^ (1 << bit));
    }
  }
  return std::move(b).build();
}

TEST(AutomorphismGenerators, VertexTransitiveGraphs) {
  EXPECT_EQ(GroupOrder(AutomorphismGenerators(Petersen()).generators), 120);
  EXPECT_EQ(GroupOrder(AutomorphismGenerators(Cube()).generators), 48);
  const Graph k33 = Graph::FromEdges(
      6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  EXPECT_EQ(GroupOrder(AutomorphismGenerators(k33).generators), 72);
  // Wreath product: (3!)^5 * |D5|.
  const Graph c5e3 = Composition(NamedFamily(Family::kCycle, 5), NamedFamily(Family::kEmpty, 3)).graph;
  EXPECT_EQ(GroupOrder(AutomorphismGenerators(c5e3).generators), 77760);
}

TEST(Canonicalize, SymmetricGraphsUnderRelabeling) {
  std::mt19937_64 rng(3);
  const Graph c5e3 = Composition(NamedFamily(Family::kCycle, 5), NamedFamily(Family::kEmpty, 3)).graph;
  for (const Graph& g : {Petersen(), Cube(), c5e3, Corona(Petersen(), NamedFamily(Family::kPath, 3)).graph}) {
    const std::string code = CanonicalCode(g);
    for (int k = 0; k < 50; ++k) {
      std::vector<Vertex> p(g.order());
      std::iota(p.begin(), p.end(), 0);
      std::shuffle(p.begin(), p.end(), rng);
      ASSERT_EQ(CanonicalCode(g.relabeled(p)), code);
    }
  }
  EXPECT_NE(CanonicalCode(Petersen()), CanonicalCode(NamedFamily(Family::kCycle, 10)));
}

TEST(IsAsymmetric, Examples) {
  EXPECT_TRUE(IsAsymmetric(NamedFamily(Family::kComplete, 1)));
  EXPECT_FALSE(IsAsymmetric(NamedFamily(Family::kComplete, 2)));
  EXPECT_TRUE(IsAsymmetric(AsymmetricSix()));
}

TEST(IsAutomorphism, RejectsNonAutomorphism) {
  EXPECT_FALSE(IsAutomorphism(NamedFamily(Family::kPath, 3), Permutation({1, 0, 2})));
  EXPECT_TRUE(IsAutomorphism(NamedFamily(Family::kPath, 3), Permutation({2, 1, 0})));
}

TEST(Canonicalize, Examples) {
  const Graph a = Graph::FromEdges(3, {{0, 1}, {1, 2}});
  const Graph b = Graph::FromEdges(3, {{1, 0}, {0, 2}});
  EXPECT_EQ(CanonicalCode(a), CanonicalCode(b));
  EXPECT_NE(CanonicalCode(NamedFamily(Family::kComplete, 3)), CanonicalCode(a));
  EXPECT_NE(CanonicalCode(NamedFamily(Family::kPath, 4)),
            CanonicalCode(NamedFamily(Family::kStar, 4)));
}

TEST(Canonicalize, LabelingProducesCode) {
  const Graph g = AsymmetricSix();
  const CanonicalForm c = Canonicalize(g);
  EXPECT_EQ(InstanceCode(g.relabeled(c.labeling)), c.code);
}

TEST(OrderedPartition, RefinementIsEquitable) {
  const Graph g = NamedFamily(Family::kStar, 5);
  OrderedPartition p(g.order());
  p.RefineAll(g);
  EXPECT_TRUE(IsEquitable(g, p));
  EXPECT_EQ(p.num_cells(), 2u);
  EXPECT_EQ(p.TargetCell(), p.cell_start(1));
}

TEST(OrderedPartition, IndividualizeMakesLeadingSingleton) {
  OrderedPartition p(4);
  const std::size_t start = p.Individualize(2);
  EXPECT_EQ(p.lab()[start], 2);
  EXPECT_EQ(p.cell_end(start), start + 1);
  EXPECT_EQ(p.num_cells(), 2u);
}

}  // namespace
}  // namespace fixset
