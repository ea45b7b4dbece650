#pragma once

#include <vector>

#include "orient/graph.hpp"

namespace orient::detail {

// Edmonds-style matroid partitioning of the edges of a multigraph into
// components of two kinds:
//   * forests (graphic matroid), and
//   * slots bound to a vertex v, each holding at most one edge incident to v.
// A union of slots is a transversal matroid, so packing m forests plus l(v)
// slots per vertex decides (m, l)-partition-connectivity exactly.
class MatroidPartition {
 public:
  MatroidPartition(const MultiGraph& g, int forests, std::vector<VertexId> slot_vertices);

  // Tries to add edge e via a shortest exchange path.  Returns false if e
  // cannot join without dropping another edge.
  bool insert(EdgeId e);

  // Inserts edges in ascending id order until every component is full.
  void fill();

  bool complete() const noexcept { return assigned_ == capacity_; }
  int assigned() const noexcept { return assigned_; }
  int capacity() const noexcept { return capacity_; }

  // Component index per edge: [0, forests) forest, [forests, ...) slot, -1 free.
  const std::vector<int>& owner() const noexcept { return owner_; }
  int forest_count() const noexcept { return forests_; }
  VertexId slot_vertex(int component) const { return slots_[component - forests_]; }

  std::vector<EdgeSet> forest_edges() const;

 private:
  bool forest_accepts(int forest, EdgeId e) const;
  // Forest edges on the path between the ends of e (e not in the forest).
  std::vector<EdgeId> forest_cycle(int forest, EdgeId e) const;
  void rebuild_forest(int forest);

  const MultiGraph& g_;
  int forests_;
  std::vector<VertexId> slots_;
  std::vector<int> owner_;
  std::vector<EdgeId> slot_occupant_;
  std::vector<std::vector<std::vector<EdgeId>>> forest_adj_;  // [forest][vertex]
  std::vector<int> forest_size_;
  int assigned_ = 0;
  int capacity_ = 0;
};

}  // namespace orient::detail
