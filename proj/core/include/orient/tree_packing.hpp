#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "orient/graph.hpp"

namespace orient {

struct TreePacking {
  std::vector<EdgeSet> trees;
  EdgeSet remainder;
};

// (m, l0): m spanning trees plus a factor with out-degree >= l0(v).
struct PartitionSpec {
  int m = 1;
  VertexIntMap l0;
};

struct PartitionDecomposition {
  std::vector<EdgeSet> trees;    // m edge-disjoint spanning trees
  EdgeSet tree_factor;           // union of `trees`, ascending
  EdgeSet rest;                  // complement of tree_factor, ascending
  std::vector<VertexId> rest_tails;  // tail of rest[i]
  // Edges of `rest` that certify the floor (l0(v) of them leave v).
  EdgeSet floor_edges;
};

/// Throws kInvalidInput describing the first broken property, if any.
void validate_packing(const MultiGraph& g, const TreePacking& packing);
void validate_decomposition(const MultiGraph& g, const PartitionSpec& spec,
                            const PartitionDecomposition& dec);
bool is_spanning_tree(const MultiGraph& g, std::span<const EdgeId> tree);

int tree_connectivity(const MultiGraph& g);

/// Exactly m edge-disjoint spanning trees; the other edges are the remainder.
/// Raises kInsufficientConnectivity when fewer than m trees exist.
TreePacking pack_spanning_trees(const MultiGraph& g, int m);

/// Subforest of the spanning tree `tree` with odd-degree vertex set exactly q.
/// Rooted at the lowest vertex id and resolved bottom-up by depth.
EdgeSet parity_forest(const MultiGraph& g, std::span<const EdgeId> tree,
                      std::span<const VertexId> q);

// Vertices of odd degree within an edge set.
VertexSet odd_vertices(const MultiGraph& g, std::span<const EdgeId> edges);

struct EulerianSplit {
  EdgeSet eulerian;   // T1 plus the parity forest of T2
  EdgeSet leftovers;  // T2 minus that forest
};

/// Spanning connected even subgraph from two edge-disjoint spanning trees.
EulerianSplit spanning_eulerian_from_pair(const MultiGraph& g, std::span<const EdgeId> t1,
                                          std::span<const EdgeId> t2);

/// Exact test by matroid partitioning: m forests plus l0(v) single-edge slots
/// at every v.  nullopt means "not partition-connected".
std::optional<PartitionDecomposition> is_partition_connected(const MultiGraph& g,
                                                              const PartitionSpec& spec);

struct LiftResult {
  MultiGraph graph;            // on V(G) \ {z}, vertices renumbered densely
  std::vector<VertexId> vertex_map;  // old id -> new id (-1 for z)
  std::vector<std::pair<EdgeId, EdgeId>> lifted_pairs;  // edge ids of G
  EdgeSet unlifted;            // z-incident edges of G left out of every pair
  // Origin of every edge of `graph`: (e, -1) for a kept edge e of G, or
  // (e1, e2) for the edge produced by lifting e1 and e2.
  std::vector<std::pair<EdgeId, EdgeId>> origin;
};

struct LiftOptions {
  std::optional<int> pair_count;  // default: d_H(z) - l0(z) - 1
  int verification_budget = 20000;
};

/// Lifts pairs of z-incident edges (never forming loops) and deletes z so the
/// result stays (m, l0)-partition-connected.  Candidates are tried in
/// lexicographic order of neighbour pairs; the first verified one is returned.
/// kPrecondition if the degree condition fails, kSearchExhausted if no
/// candidate verifies within budget.
LiftResult lift_preserving(const MultiGraph& g, VertexId z, const PartitionSpec& spec,
                           const LiftOptions& options = {});

// Applies a given list of neighbour pairs (x, y) at z: builds the lifted graph
// on V \ {z} using the lowest unused z-incident edge ids for each pair.
LiftResult apply_lifts(const MultiGraph& g, VertexId z,
                       std::span<const std::pair<VertexId, VertexId>> neighbour_pairs);

/// Calls `visit` for every multiset of `count` loop-free neighbour pairs at z,
/// in lexicographic order, until it returns true.  Returns whether any visit
/// returned true.
bool for_each_lift_choice(
    const MultiGraph& g, VertexId z, int count,
    const std::function<bool(std::span<const std::pair<VertexId, VertexId>>)>& visit);

}  // namespace orient
