#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace orient {

using Capacity = std::int64_t;

/// Dinic max-flow over integer capacities.
class FlowNetwork {
 public:
  explicit FlowNetwork(int node_count = 0);

  int add_node();
  int node_count() const noexcept { return static_cast<int>(adjacency_.size()); }

  /// Returns the arc id; the paired residual arc is id ^ 1.
  int add_arc(int from, int to, Capacity capacity);

  Capacity max_flow(int source, int sink);

  Capacity flow(int arc) const;
  int arc_from(int arc) const { return arcs_[arc ^ 1].to; }
  int arc_to(int arc) const { return arcs_[arc].to; }

  /// Nodes reachable from `source` in the residual network of the last flow.
  std::vector<char> residual_reachable(int source) const;

 private:
  struct Arc {
    int to;
    Capacity residual;
    Capacity capacity;
  };

  bool build_levels(int source, int sink);
  Capacity push(int node, int sink, Capacity limit);

  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
};

/// Feasible circulation with lower and upper arc bounds, via the standard
/// excess/deficit transform onto a FlowNetwork.
class BoundedCirculation {
 public:
  explicit BoundedCirculation(int node_count) : node_count_(node_count) {}

  int add_arc(int from, int to, Capacity lower, Capacity upper);

  /// Flow value of every arc (indexed by add_arc return value), or nullopt if
  /// no circulation respects all bounds.
  std::optional<std::vector<Capacity>> solve() const;

 private:
  struct Arc {
    int from;
    int to;
    Capacity lower;
    Capacity upper;
  };
  int node_count_;
  std::vector<Arc> arcs_;
};

}  // namespace orient
