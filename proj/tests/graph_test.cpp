#include <gtest/gtest.h>

#include "fixset/error.hpp"
#include "fixset/graph.hpp"

namespace fixset {
namespace {

TEST(FromEdges, BuildsSmallFamilies) {
  const Graph k3 = Graph::FromEdges(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(k3, NamedFamily(Family::kComplete, 3));
  EXPECT_EQ(Graph::FromEdges(2, {}).size(), 0u);
  EXPECT_EQ(Graph::FromEdges(4, {{0, 1}, {1, 2}, {2, 3}}), NamedFamily(Family::kPath, 4));
  EXPECT_EQ(ValidateGraph(k3), "");
}

TEST(FromEdges, RejectsBadInput) {
  EXPECT_THROW(Graph::FromEdges(0, {}), InvalidArgument);
  EXPECT_THROW(Graph::FromEdges(3, {{0, 3}}), InvalidArgument);
  EXPECT_THROW(Graph::FromEdges(3, {{1, 1}}), InvalidArgument);
  EXPECT_THROW(Graph::FromEdges(5000, {}), CapExceeded);
  EXPECT_NO_THROW(Graph::FromEdges(5000, {}, 8192));
}

TEST(FromEdges, DuplicateEdgesCollapse) {
  const Graph g = Graph::FromEdges(3, {{0, 1}, {1, 0}, {0, 1}});
  EXPECT_EQ(g.size(), 1u);
  EXPECT_TRUE(g.adjacent(1, 0));
}

TEST(NamedFamily, Shapes) {
  EXPECT_EQ(NamedFamily(Family::kComplete, 4).size(), 6u);
  EXPECT_EQ(NamedFamily(Family::kStar, 4).degrees(), (std::vector<int>{3, 1, 1, 1}));
  for (int d : NamedFamily(Family::kCycle, 5).degrees()) EXPECT_EQ(d, 2);
  EXPECT_THROW(NamedFamily(Family::kCycle, 2), InvalidArgument);
  EXPECT_EQ(ParseFamily("cycle"), Family::kCycle);
  EXPECT_FALSE(ParseFamily("wheel").has_value());
}

TEST(Distances, PathCycleAndSentinel) {
  const DistanceMatrix p4 = AllPairsDistances(NamedFamily(Family::kPath, 4));
  EXPECT_EQ(p4.at(0, 3), 3);

  const Graph two_k2 = Graph::FromEdges(4, {{0, 1}, {2, 3}});
  const DistanceMatrix d = AllPairsDistances(two_k2);
  EXPECT_EQ(d.at(0, 2), DistanceMatrix::kUnreachable);
  EXPECT_FALSE(d.reachable(1, 3));
  EXPECT_FALSE(d.eccentricity(0).has_value());

  const DistanceMatrix c6 = AllPairsDistances(NamedFamily(Family::kCycle, 6));
  EXPECT_EQ(c6.at(0, 3), 3);
  EXPECT_EQ(c6.eccentricity(0), 3);
  EXPECT_EQ(c6.distance_neighborhood(0, 2), (std::vector<Vertex>{2, 4}));
}

TEST(Components, Examples) {
  EXPECT_EQ(Components(NamedFamily(Family::kComplete, 3)).size(), 1u);
  EXPECT_EQ(Components(NamedFamily(Family::kEmpty, 3)).size(), 3u);
  const Graph parts[] = {NamedFamily(Family::kPath, 2), NamedFamily(Family::kPath, 3)};
  const auto u = DisjointUnion(parts);
  EXPECT_EQ(Components(u.graph),
            (std::vector<std::vector<Vertex>>{{0, 1}, {2, 3, 4}}));
  EXPECT_EQ(u.offsets, (std::vector<std::size_t>{0, 2, 5}));
}

TEST(Induce, Examples) {
  const Vertex three[] = {0, 1, 2};
  EXPECT_EQ(Induce(NamedFamily(Family::kComplete, 4), three).graph,
            NamedFamily(Family::kComplete, 3));
  const Vertex ends[] = {0, 2};
  const auto sub = Induce(NamedFamily(Family::kPath, 4), ends);
  EXPECT_EQ(sub.graph, NamedFamily(Family::kEmpty, 2));
  EXPECT_EQ(sub.to_parent, (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(Induce(NamedFamily(Family::kCycle, 5), three).graph, NamedFamily(Family::kPath, 3));
}

TEST(DisjointUnion, Examples) {
  const Graph k2s[] = {NamedFamily(Family::kComplete, 2), NamedFamily(Family::kComplete, 2)};
  const Graph u = DisjointUnion(k2s).graph;
  EXPECT_EQ(u.order(), 4u);
  EXPECT_EQ(u.size(), 2u);
  EXPECT_EQ(Components(u).size(), 2u);

  const Graph p3[] = {NamedFamily(Family::kPath, 3)};
  EXPECT_EQ(DisjointUnion(p3).graph, p3[0]);

  const Graph mixed[] = {NamedFamily(Family::kComplete, 1), NamedFamily(Family::kComplete, 3)};
  EXPECT_EQ(DisjointUnion(mixed).graph.degrees(), (std::vector<int>{0, 2, 2, 2}));
}

TEST(JoinWithApex, Examples) {
  EXPECT_EQ(JoinWithApex(NamedFamily(Family::kComplete, 3)), NamedFamily(Family::kComplete, 4));
  const Graph star = JoinWithApex(NamedFamily(Family::kEmpty, 3));
  EXPECT_EQ(star.degree(3), 3);
  EXPECT_EQ(star.size(), 3u);
  const Graph fan = JoinWithApex(NamedFamily(Family::kPath, 3));
  EXPECT_EQ(fan.degrees(), (std::vector<int>{2, 3, 2, 3}));
}

TEST(Graph, RelabelAndComplement) {
  const Graph p3 = NamedFamily(Family::kPath, 3);
  const Vertex perm[] = {1, 0, 2};
  const Graph r = p3.relabeled(perm);
  EXPECT_TRUE(r.adjacent(0, 1));
  EXPECT_TRUE(r.adjacent(0, 2));
  EXPECT_FALSE(r.adjacent(1, 2));
  EXPECT_EQ(p3.complement().size(), 1u);
  EXPECT_EQ(NamedFamily(Family::kStar, 5).max_degree(), 4);
}

}  // namespace
}  // namespace fixset
