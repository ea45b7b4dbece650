#pragma once

// Brute-force references used by the tests.  They share nothing with the
// library beyond MultiGraph, so they can check it independently.

#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <vector>

#include "orient/graph.hpp"

namespace brute {

using orient::MultiGraph;
using orient::VertexId;

// Calls fn(out_degrees, mask) for each of the 2^|E| orientations; bit e set
// means edge e points v -> u.  Stops when fn returns true.
inline bool for_each_orientation(
    const MultiGraph& g, const std::function<bool(const std::vector<int>&, std::uint32_t)>& fn) {
  const int m = g.edge_count();
  std::vector<int> out(g.vertex_count());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::fill(out.begin(), out.end(), 0);
    for (int e = 0; e < m; ++e) {
      const auto& ed = g.edge(e);
      ++out[(mask >> e) & 1 ? ed.v : ed.u];
    }
    if (fn(out, static_cast<std::uint32_t>(mask))) return true;
  }
  return false;
}

inline bool exists_orientation(const MultiGraph& g,
                               const std::function<bool(const std::vector<int>&)>& ok) {
  return for_each_orientation(g, [&](const std::vector<int>& out, std::uint32_t) { return ok(out); });
}

inline int crossing(const MultiGraph& g, const std::vector<int>& part_of) {
  int c = 0;
  for (const auto& e : g.edges()) c += part_of[e.u] != part_of[e.v];
  return c;
}

// Every set partition of {0..n-1} as a restricted growth string.
inline void for_each_partition(int n, const std::function<void(const std::vector<int>&, int)>& fn) {
  std::vector<int> a(n, 0);
  std::function<void(int, int)> rec = [&](int i, int blocks) {
    if (i == n) {
      fn(a, blocks);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      a[i] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  if (n == 0) {
    fn(a, 0);
    return;
  }
  rec(0, 0);
}

// Nash-Williams / Tutte: min over partitions P (|P| >= 2) of
// floor(cross(P) / (|P| - 1)).
inline int nash_williams(const MultiGraph& g) {
  int best = std::numeric_limits<int>::max();
  for_each_partition(g.vertex_count(), [&](const std::vector<int>& part, int blocks) {
    if (blocks >= 2) best = std::min(best, crossing(g, part) / (blocks - 1));
  });
  return best;
}

// Minimum cut by subset enumeration.
inline int min_cut(const MultiGraph& g) {
  const int n = g.vertex_count();
  int best = std::numeric_limits<int>::max();
  for (std::uint32_t s = 1; s + 1 < (1u << n); ++s) {
    int c = 0;
    for (const auto& e : g.edges()) c += ((s >> e.u) & 1) != ((s >> e.v) & 1);
    best = std::min(best, c);
  }
  return best;
}

// Hakimi's condition checked over all vertex subsets.
inline bool hakimi_condition(const MultiGraph& g, const std::vector<std::int64_t>& q) {
  const int n = g.vertex_count();
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    std::int64_t inside = 0, cap = 0;
    for (const auto& e : g.edges()) inside += ((s >> e.u) & 1) && ((s >> e.v) & 1);
    for (int v = 0; v < n; ++v) {
      if ((s >> v) & 1) cap += q[v];
    }
    if (inside > cap) return false;
  }
  return true;
}

// (m, l0)-partition-connectivity straight from the definition: some split of
// E into a factor with m edge-disjoint spanning trees and a factor F with an
// orientation of out-degree >= l0.
inline bool partition_connected(const MultiGraph& g, int m, const std::vector<std::int64_t>& l0) {
  const int e_count = g.edge_count();
  const int n = g.vertex_count();
  for (std::uint32_t mask = 0; mask < (1u << e_count); ++mask) {
    std::vector<orient::Edge> tree_part, rest;
    for (int e = 0; e < e_count; ++e) ((mask >> e) & 1 ? tree_part : rest).push_back(g.edge(e));
    if (n >= 2 && static_cast<int>(tree_part.size()) < m * (n - 1)) continue;
    const MultiGraph t(n, tree_part);
    if (n >= 2 && nash_williams(t) < m) continue;
    // Orientation of F with out-degree >= l0: for every S, the F-edges with an
    // end in S must be at least l0(S).
    bool ok = true;
    for (std::uint32_t s = 1; s < (1u << n) && ok; ++s) {
      std::int64_t touching = 0, need = 0;
      for (const auto& ed : rest) touching += ((s >> ed.u) & 1) || ((s >> ed.v) & 1);
      for (int v = 0; v < n; ++v) {
        if ((s >> v) & 1) need += l0[v];
      }
      ok = touching >= need;
    }
    if (ok) return true;
  }
  return false;
}

// Irreducible: no (I, J) other than (empty, empty) and (all, all) with equal
// sums.
inline bool irreducible(const std::vector<std::int64_t>& xs, const std::vector<std::int64_t>& ys) {
  const std::size_t m = xs.size(), n = ys.size();
  for (std::uint32_t i = 0; i < (1u << m); ++i) {
    std::int64_t sx = 0;
    for (std::size_t a = 0; a < m; ++a) {
      if ((i >> a) & 1) sx += xs[a];
    }
    for (std::uint32_t j = 0; j < (1u << n); ++j) {
      if (i == 0 && j == 0) continue;
      if (i + 1 == (1u << m) && j + 1 == (1u << n)) continue;
      std::int64_t sy = 0;
      for (std::size_t b = 0; b < n; ++b) {
        if ((j >> b) & 1) sy += ys[b];
      }
      if (sx == sy) return false;
    }
  }
  return true;
}

}  // namespace brute
