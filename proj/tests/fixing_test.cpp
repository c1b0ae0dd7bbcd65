#include <gtest/gtest.h>

#include "fixset/corpus.hpp"
#include "fixset/error.hpp"
#include "fixset/fixing.hpp"
#include "oracle/brute_force.hpp"

namespace fixset {
namespace {

TEST(IsFixingSet, Examples) {
  const Graph c4 = NamedFamily(Family::kCycle, 4);
  const Vertex all[] = {0, 1, 2, 3};
  EXPECT_TRUE(IsFixingSet(c4, all));
  const Vertex zero[] = {0};
  EXPECT_FALSE(IsFixingSet(c4, zero));
  const Vertex two[] = {0, 1};
  EXPECT_TRUE(IsFixingSet(NamedFamily(Family::kComplete, 3), two));
  const Vertex bad[] = {7};
  EXPECT_THROW(IsFixingSet(c4, bad), InvalidArgument);
}

TEST(FixingNumber, Families) {
  EXPECT_EQ(FixingNumber(NamedFamily(Family::kComplete, 5)).fix_number, 4u);
  EXPECT_EQ(FixingNumber(NamedFamily(Family::kPath, 7)).fix_number, 1u);
  EXPECT_EQ(FixingNumber(NamedFamily(Family::kCycle, 8)).fix_number, 2u);
  const FixingResult a = FixingNumber(AsymmetricSix());
  EXPECT_EQ(a.fix_number, 0u);
  EXPECT_TRUE(a.witness.empty());
  EXPECT_TRUE(a.optimal);
}

TEST(FixingNumber, WitnessFixes) {
  const Graph g = NamedFamily(Family::kCycle, 7).complement();
  const FixingResult r = FixingNumber(g);
  EXPECT_TRUE(IsFixingSet(g, r.witness));
  EXPECT_EQ(r.witness.size(), r.fix_number);
  EXPECT_EQ(r.fix_number, oracle::FixingNumber(g));
}

TEST(FixingNumber, CapIsAnExplicitRefusal) {
  EXPECT_THROW(FixingNumber(NamedFamily(Family::kPath, 10), 9), CapExceeded);
}

TEST(FixingNumberRestricted, CandidatesThatCannotFix) {
  FixingOptions opts;
  opts.candidates = std::vector<Vertex>{1};
  EXPECT_FALSE(FixingNumberRestricted(NamedFamily(Family::kPath, 3), opts).has_value());
  opts.candidates = std::vector<Vertex>{0, 1};
  const auto r = FixingNumberRestricted(NamedFamily(Family::kStar, 3), opts);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->fix_number, 1u);
}

TEST(FixingNumberRestricted, AgreesWithOracle) {
  const Graph g = JoinWithApex(NamedFamily(Family::kCycle, 5));
  std::vector<Vertex> base = {0, 1, 2, 3, 4};
  FixingOptions opts;
  opts.candidates = base;
  EXPECT_EQ(FixingNumberRestricted(g, opts)->fix_number, oracle::FixingNumber(g, base));
}

TEST(GreedyFixingSet, Examples) {
  EXPECT_EQ(GreedyFixingSet(NamedFamily(Family::kComplete, 4)).fix_number, 3u);
  EXPECT_EQ(GreedyFixingSet(NamedFamily(Family::kPath, 5)).fix_number, 1u);
  EXPECT_EQ(GreedyFixingSet(AsymmetricSix()).fix_number, 0u);
  EXPECT_FALSE(GreedyFixingSet(NamedFamily(Family::kPath, 5)).optimal);
}

TEST(FixedVertices, Examples) {
  EXPECT_EQ(FixedVertices(NamedFamily(Family::kStar, 4)), (std::vector<Vertex>{0}));
  EXPECT_EQ(FixedVertices(NamedFamily(Family::kPath, 3)), (std::vector<Vertex>{1}));
  EXPECT_TRUE(FixedVertices(NamedFamily(Family::kComplete, 3)).empty());
}

TEST(RelativeFixingSet, Examples) {
  EXPECT_EQ(RelativeFixingSet(NamedFamily(Family::kPath, 3), 0, 2).vertices,
            (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(RelativeFixingSet(NamedFamily(Family::kCycle, 4), 0, 2).vertices,
            (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(RelativeFixingSet(NamedFamily(Family::kComplete, 3), 0, 1).vertices,
            (std::vector<Vertex>{0, 1}));
  const auto dissimilar = RelativeFixingSet(NamedFamily(Family::kPath, 3), 0, 1);
  EXPECT_FALSE(dissimilar.similar);
  EXPECT_EQ(dissimilar.vertices.size(), 3u);
  EXPECT_THROW(RelativeFixingSet(NamedFamily(Family::kPath, 3), 1, 1), InvalidArgument);
}

Graph Union(std::initializer_list<Graph> parts) {
  const std::vector<Graph> v(parts);
  return DisjointUnion(v).graph;
}

TEST(FixingNumberDisconnected, AsymmetricTwins) {
  const Graph g = Union({AsymmetricSix(), AsymmetricSix()});
  const DisconnectedFixing d = FixingNumberDisconnected(g);
  EXPECT_EQ(d.formula_value, 1u);
  EXPECT_TRUE(d.symmetric.empty());
  ASSERT_EQ(d.asymmetric_classes.size(), 1u);
  EXPECT_EQ(d.asymmetric_classes[0].components.size(), 2u);
  EXPECT_EQ(d.solver->fix_number, 1u);
}

TEST(FixingNumberDisconnected, IsomorphicSymmetricComponents) {
  const Graph p3 = NamedFamily(Family::kPath, 3);
  const DisconnectedFixing d = FixingNumberDisconnected(Union({p3, p3}));
  EXPECT_EQ(d.formula_value, 2u);
  EXPECT_EQ(d.solver->fix_number, 2u);
  EXPECT_TRUE(d.isomorphic_symmetric_components);
}

TEST(FixingNumberDisconnected, MixedComponents) {
  const DisconnectedFixing d = FixingNumberDisconnected(
      Union({NamedFamily(Family::kComplete, 2), NamedFamily(Family::kCycle, 3)}));
  EXPECT_EQ(d.formula_value, 3u);
  EXPECT_EQ(d.solver->fix_number, 3u);
  EXPECT_FALSE(d.isomorphic_symmetric_components);
}

TEST(FixingNumberDisconnected, Hypotheses) {
  EXPECT_THROW(FixingNumberDisconnected(NamedFamily(Family::kPath, 3)), HypothesisError);
  EXPECT_THROW(FixingNumberDisconnected(
                   Union({NamedFamily(Family::kPath, 3), NamedFamily(Family::kComplete, 1)})),
               HypothesisError);
}

}  // namespace
}  // namespace fixset
