#include <gtest/gtest.h>

#include "list_instances.hpp"
#include "orient/error.hpp"
#include "orient/generators.hpp"
#include "orient/list_orient.hpp"
#include "orient/oracle.hpp"

using namespace orient;

namespace {

IntList interval(std::int64_t lo, std::int64_t hi) {
  IntList out;
  for (std::int64_t c = lo; c <= hi; ++c) out.push_back(c);
  return out;
}

SparseListProblem problem(MultiGraph g, VertexId z, std::vector<IntList> lists) {
  const int n = g.vertex_count();
  return SparseListProblem{std::move(g),   z,
                           ListAssignment(std::move(lists)),
                           VertexIntMap(n), VertexIntMap(n), VertexIntMap(n)};
}

TEST(Gap, Examples) {
  EXPECT_EQ(gap_of({5}), 0);
  EXPECT_EQ(gap_of({1, 2, 4}), 2);
  EXPECT_EQ(gap_of({0, 3, 6}), 3);
  EXPECT_THROW(gap_of({}), Error);
  EXPECT_EQ(ListAssignment({{4, 1, 2}, {0, 3, 6}}).gap(), 3);
}

TEST(SparseList, TwoVertexBase) {
  const MultiGraph g(2, {{0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}});
  const SparseListProblem prob = problem(g, 0, {{2, 3}, {2, 3}});
  const ListResult r = sparse_list_orientation(prob);
  const int out1 = r.orientation.out_degree(1);
  EXPECT_TRUE(out1 == 2 || out1 == 3);
  ASSERT_FALSE(r.trace.empty());
  EXPECT_EQ(r.trace.front().step, ListStep::kBase);
}

TEST(SparseList, PeelsAtZ) {
  // z = 0 with d(z) = 5 < 2 l0(z) = 6: the edge-removal step applies first.
  const MultiGraph g(3, {{0, 1}, {0, 1}, {0, 1}, {0, 2}, {0, 2}, {1, 2}, {1, 2}});
  for (std::int64_t sz : {1, 3}) {
    SparseListProblem prob = problem(g, 0, {interval(0, 5), interval(1, 4), interval(1, 3)});
    prob.l0[0] = 3;
    prob.s[0] = sz;
    EXPECT_TRUE(check_list_preconditions(prob).empty());
    const ListResult r = sparse_list_orientation(prob);
    EXPECT_TRUE(check_list_orientation(prob, r.orientation).empty());
    ASSERT_FALSE(r.trace.empty());
    EXPECT_EQ(r.trace.front().step, ListStep::kCase2);
  }
}

TEST(SparseList, PreconditionsReported) {
  const MultiGraph g(2, {{0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}});
  SparseListProblem prob = problem(g, 0, {{2, 3}, {2, 3}});
  prob.s[1] = 2;
  prob.s0[1] = 2;
  try {
    sparse_list_orientation(prob);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPrecondition);
  }
  // gap(L(z)) must equal gap(L).
  EXPECT_FALSE(check_list_preconditions(problem(g, 0, {{2}, {2, 3}})).empty());
  // A single spanning tree is not (2, 0)-partition-connected.
  EXPECT_FALSE(check_list_preconditions(problem(gen::path(3), 0, {{0, 1}, {0, 1}, {0, 1}})).empty());
}

TEST(SparseList, ListsPrunedToDegreeRange) {
  const MultiGraph g(2, {{0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}});
  const SparseListProblem prob = problem(g, 0, {{-3, 2, 3, 40}, {2, 3, 99}});
  const SparseListProblem norm = normalize(prob);
  EXPECT_EQ(norm.lists[0], (IntList{2, 3}));
  EXPECT_EQ(norm.lists[1], (IntList{2, 3}));
}

TEST(SparseList, RandomIntervalInstancesAgreeWithOracle) {
  gen::Rng rng(40);
  int solved = 0;
  for (int attempt = 0; attempt < 4000 && solved < 60; ++attempt) {
    auto prob = instances::random_list_problem(rng, 12);
    if (!prob) continue;
    const ListResult r = sparse_list_orientation(*prob);
    EXPECT_TRUE(check_list_orientation(*prob, r.orientation).empty());
    EXPECT_TRUE(enumerate_orientations(prob->g, list_predicate(*prob)).has_value());
    ++solved;
  }
  EXPECT_GE(solved, 30);
}

TEST(SparseList, CheckerFlagsViolations) {
  const MultiGraph g(2, {{0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}});
  const SparseListProblem prob = problem(g, 0, {{2, 3}, {2, 3}});
  const Orientation all_out = Orientation::all_forward(g);
  EXPECT_FALSE(check_list_orientation(prob, all_out).empty());
}

}  // namespace
