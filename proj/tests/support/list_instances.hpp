#pragma once

// Random sparse-list instances that satisfy every hypothesis of the solver.

#include <optional>
#include <random>

#include "orient/generators.hpp"
#include "orient/list_orient.hpp"

namespace instances {

using namespace orient;

// Lists are integer intervals (gap <= 1) reaching at least one step past
// d(v)/2 on both sides, so k = 1 and m = 2.  Returns nullopt when the drawn
// instance misses a hypothesis.
inline std::optional<SparseListProblem> random_list_problem(gen::Rng& rng, int max_edges) {
  const int n = 2 + static_cast<int>(rng() % 4);
  const int base = 2 * (n - 1);
  if (base > max_edges) return std::nullopt;
  const int extra = static_cast<int>(rng() % (max_edges - base + 1));
  SparseListProblem prob;
  prob.g = gen::random_tree_connected(rng, n, 2, extra);
  prob.z = static_cast<VertexId>(rng() % n);
  std::vector<IntList> lists(n);
  prob.s = VertexIntMap(n);
  prob.s0 = VertexIntMap(n);
  prob.l0 = VertexIntMap(n);
  for (VertexId v = 0; v < n; ++v) {
    const std::int64_t d = prob.g.degree(v);
    const std::int64_t lo = std::max<std::int64_t>(0, d / 2 - 1 - static_cast<std::int64_t>(rng() % 2));
    const std::int64_t hi = std::min<std::int64_t>(d, (d + 1) / 2 + 1 + static_cast<std::int64_t>(rng() % 2));
    for (std::int64_t c = lo; c <= hi; ++c) lists[v].push_back(c);
    if (rng() % 3 == 0) prob.l0[v] = 1;
    // Large floors at z make the edge-peeling step reachable.
    if (v == prob.z) prob.l0[v] = static_cast<std::int64_t>(rng() % 4);
    prob.s[v] = static_cast<std::int64_t>(rng() % 2);
    prob.s0[v] = static_cast<std::int64_t>(rng() % 2);
  }
  prob.lists = ListAssignment(std::move(lists));
  if (!check_list_preconditions(prob).empty()) return std::nullopt;
  return prob;
}

}  // namespace instances
