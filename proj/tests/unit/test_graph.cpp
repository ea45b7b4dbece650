#include <gtest/gtest.h>

#include <random>

#include "brute.hpp"
#include "orient/error.hpp"
#include "orient/generators.hpp"
#include "orient/graph.hpp"
#include "orient/max_flow.hpp"

using namespace orient;

namespace {

const MultiGraph kC3(3, {{0, 1}, {1, 2}, {2, 0}});

TEST(Graph, Degrees) {
  EXPECT_EQ(degree(kC3, 1), 2);
  EXPECT_EQ(degree(gen::triangle_times(2), 0), 4);
  const MultiGraph g(3, {{0, 1}});
  EXPECT_EQ(degree(g, 2), 0);
  EXPECT_THROW(g.degree(3), Error);
}

TEST(Graph, RejectsLoopsAndBadEndpoints) {
  EXPECT_THROW(MultiGraph(2, {{0, 0}}), Error);
  EXPECT_THROW(MultiGraph(2, {{0, 2}}), Error);
  EXPECT_THROW(MultiGraph(2, {{-1, 1}}), Error);
}

TEST(Graph, CutAndInternal) {
  const std::vector<VertexId> a{0}, ab{0, 1}, all{0, 1, 2}, none{};
  EXPECT_EQ(cut_size(kC3, a), 2);
  EXPECT_EQ(cut_size(kC3, ab), 2);
  EXPECT_EQ(cut_size(gen::triangle_times(2), a), 4);
  EXPECT_EQ(internal_edges(kC3, all), 3);
  EXPECT_EQ(internal_edges(kC3, ab), 1);
  EXPECT_EQ(internal_edges(kC3, none), 0);
}

TEST(Graph, EdgeConnectivityExamples) {
  EXPECT_EQ(edge_connectivity(kC3), 2);
  EXPECT_EQ(edge_connectivity(gen::triangle_times(2)), 4);
  EXPECT_EQ(edge_connectivity(MultiGraph(4, {{0, 1}, {2, 3}})), 0);
  EXPECT_EQ(edge_connectivity(gen::complete(4)), 3);
}

TEST(Graph, EdgeConnectivityMatchesSubsetMinCut) {
  gen::Rng rng(11);
  for (int round = 0; round < 200; ++round) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const int m = n - 1 + static_cast<int>(rng() % 10);
    const MultiGraph g = gen::random_connected(rng, n, m);
    EXPECT_EQ(edge_connectivity(g), brute::min_cut(g)) << "round " << round;
  }
}

TEST(Graph, LiftPath) {
  const MultiGraph path(3, {{0, 1}, {1, 2}});
  const MultiGraph h = lift(path, 0, 1, 1);
  ASSERT_EQ(h.edge_count(), 1);
  EXPECT_EQ(h.edge(0), (Edge{0, 2}));
}

TEST(Graph, LiftTriangleGivesParallelPair) {
  const MultiGraph h = lift(kC3, 0, 1, 1);
  ASSERT_EQ(h.edge_count(), 2);
  EXPECT_EQ(h.degree(0), 2);
  EXPECT_EQ(h.degree(2), 2);
  EXPECT_EQ(h.degree(1), 0);
}

TEST(Graph, LiftRejectsLoopAndForeignPivot) {
  const MultiGraph g(2, {{0, 1}, {1, 0}});
  EXPECT_THROW(lift(g, 0, 1, 1), Error);
  EXPECT_THROW(lift(kC3, 0, 1, 2), Error);
  EXPECT_THROW(lift(kC3, 0, 0, 1), Error);
}

TEST(Orientation, OutDegrees) {
  const Orientation cycle = Orientation::all_forward(kC3);
  for (VertexId v = 0; v < 3; ++v) EXPECT_EQ(out_degree(cycle, v), 1);
  const MultiGraph star = gen::star(3);
  const Orientation d = Orientation::all_forward(star);
  EXPECT_EQ(d.out_degree(0), 3);
  EXPECT_EQ(d.out_degree(2), 0);
  EXPECT_EQ(d.reversed().out_degree(0), 0);
  EXPECT_TRUE(d.belongs_to(star));
  EXPECT_FALSE(d.belongs_to(kC3));
}

TEST(Orientation, FromTails) {
  const std::vector<VertexId> tails{1, 2, 0};
  const Orientation d = orientation_from_tails(kC3, tails);
  EXPECT_EQ(d.direction(0), Direction::kBackward);
  EXPECT_EQ(d.tail(kC3, 1), 2);
  const std::vector<VertexId> bad{2, 2, 0};
  EXPECT_THROW(orientation_from_tails(kC3, bad), Error);
}

TEST(Orientation, RejectsWrongLength) {
  EXPECT_THROW(Orientation(kC3, std::vector<Direction>(2)), Error);
}

TEST(MaxFlow, SimpleNetwork) {
  FlowNetwork net;
  const int s = net.add_node(), a = net.add_node(), b = net.add_node(), t = net.add_node();
  net.add_arc(s, a, 3);
  net.add_arc(s, b, 2);
  net.add_arc(a, b, 1);
  net.add_arc(a, t, 2);
  net.add_arc(b, t, 3);
  EXPECT_EQ(net.max_flow(s, t), 5);
  EXPECT_EQ(net.max_flow(s, t), 5);
}

TEST(MaxFlow, CirculationWithLowerBounds) {
  BoundedCirculation ok(3);
  ok.add_arc(0, 1, 1, 2);
  ok.add_arc(1, 2, 1, 1);
  ok.add_arc(2, 0, 0, 5);
  auto flow = ok.solve();
  ASSERT_TRUE(flow);
  EXPECT_EQ((*flow)[1], 1);
  BoundedCirculation bad(2);
  bad.add_arc(0, 1, 2, 3);
  bad.add_arc(1, 0, 0, 1);
  EXPECT_FALSE(bad.solve());
}

}  // namespace
