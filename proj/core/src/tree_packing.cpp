#include "orient/tree_packing.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "matroid_partition.hpp"
#include "orient/error.hpp"

namespace orient {

namespace {

void check_edges(const MultiGraph& g, std::span<const EdgeId> edges, const char* what) {
  for (EdgeId e : edges) {
    if (!g.valid_edge(e)) {
      throw Error(ErrorCode::kInvalidInput, std::string(what) + " references edge " +
                                                std::to_string(e) + " outside the graph");
    }
  }
}

EdgeSet sorted_union(std::span<const EdgeSet> parts) {
  EdgeSet out;
  for (const EdgeSet& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool packable(const MultiGraph& g, int m) {
  detail::MatroidPartition part(g, m, {});
  part.fill();
  return part.complete();
}

}  // namespace

bool is_spanning_tree(const MultiGraph& g, std::span<const EdgeId> tree) {
  if (g.vertex_count() == 0) return tree.empty();
  if (static_cast<int>(tree.size()) != g.vertex_count() - 1) return false;
  std::vector<VertexId> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (EdgeId e : tree) {
    if (!g.valid_edge(e)) return false;
    const VertexId a = find(g.edge(e).u);
    const VertexId b = find(g.edge(e).v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

void validate_packing(const MultiGraph& g, const TreePacking& packing) {
  std::vector<int> uses(g.edge_count(), 0);
  for (std::size_t i = 0; i < packing.trees.size(); ++i) {
    check_edges(g, packing.trees[i], "tree");
    if (!is_spanning_tree(g, packing.trees[i])) {
      throw Error(ErrorCode::kInvalidInput, "tree " + std::to_string(i) +
                                                " is not a spanning tree");
    }
    for (EdgeId e : packing.trees[i]) ++uses[e];
  }
  check_edges(g, packing.remainder, "remainder");
  for (EdgeId e : packing.remainder) ++uses[e];
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (uses[e] != 1) {
      throw Error(ErrorCode::kInvalidInput, "edge " + std::to_string(e) + " is used " +
                                                std::to_string(uses[e]) + " times");
    }
  }
}

int tree_connectivity(const MultiGraph& g) {
  if (g.vertex_count() < 2) {
    throw Error(ErrorCode::kInvalidInput, "tree connectivity needs at least 2 vertices");
  }
  int lo = 0;
  int hi = g.edge_count() / (g.vertex_count() - 1);
  while (lo < hi) {
    const int mid = (lo + hi + 1) / 2;
    if (packable(g, mid)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

TreePacking pack_spanning_trees(const MultiGraph& g, int m) {
  if (m < 1) throw Error(ErrorCode::kInvalidInput, "tree count must be positive");
  if (g.vertex_count() == 0) throw Error(ErrorCode::kInvalidInput, "empty graph");
  detail::MatroidPartition part(g, m, {});
  part.fill();
  if (!part.complete()) {
    throw Error(ErrorCode::kInsufficientConnectivity,
                "graph does not contain " + std::to_string(m) + " edge-disjoint spanning trees");
  }
  TreePacking packing;
  packing.trees = part.forest_edges();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (part.owner()[e] < 0) packing.remainder.push_back(e);
  }
  return packing;
}

VertexSet odd_vertices(const MultiGraph& g, std::span<const EdgeId> edges) {
  std::vector<int> deg(g.vertex_count(), 0);
  for (EdgeId e : edges) {
    ++deg[g.edge(e).u];
    ++deg[g.edge(e).v];
  }
  VertexSet odd;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (deg[v] % 2) odd.push_back(v);
  }
  return odd;
}

EdgeSet parity_forest(const MultiGraph& g, std::span<const EdgeId> tree,
                      std::span<const VertexId> q) {
  check_edges(g, tree, "tree");
  if (!is_spanning_tree(g, tree)) {
    throw Error(ErrorCode::kInvalidInput, "parity forest needs a spanning tree");
  }
  std::vector<char> target(g.vertex_count(), 0);
  for (VertexId v : q) {
    if (!g.valid_vertex(v)) throw Error(ErrorCode::kInvalidInput, "Q has an invalid vertex");
    target[v] ^= 1;
  }
  if (std::count(target.begin(), target.end(), 1) % 2) {
    throw Error(ErrorCode::kInvalidInput, "Q must have even size");
  }
  const int n = g.vertex_count();
  if (n == 0) return {};
  std::vector<std::vector<EdgeId>> adj(n);
  for (EdgeId e : tree) {
    adj[g.edge(e).u].push_back(e);
    adj[g.edge(e).v].push_back(e);
  }
  std::vector<int> depth(n, -1);
  std::vector<EdgeId> parent_edge(n, -1);
  std::queue<VertexId> queue;
  depth[0] = 0;
  queue.push(0);
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop();
    for (EdgeId e : adj[v]) {
      const VertexId w = g.other_end(e, v);
      if (depth[w] < 0) {
        depth[w] = depth[v] + 1;
        parent_edge[w] = e;
        queue.push(w);
      }
    }
  }
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&depth](VertexId a, VertexId b) { return depth[a] > depth[b]; });
  std::vector<char> parity(n, 0);
  EdgeSet forest;
  for (VertexId v : order) {
    if (v == 0 || parity[v] == target[v]) continue;
    const EdgeId e = parent_edge[v];
    forest.push_back(e);
    parity[v] ^= 1;
    parity[g.other_end(e, v)] ^= 1;
  }
  std::sort(forest.begin(), forest.end());
  return forest;
}

EulerianSplit spanning_eulerian_from_pair(const MultiGraph& g, std::span<const EdgeId> t1,
                                          std::span<const EdgeId> t2) {
  check_edges(g, t1, "T1");
  check_edges(g, t2, "T2");
  if (!is_spanning_tree(g, t1) || !is_spanning_tree(g, t2)) {
    throw Error(ErrorCode::kInvalidInput, "Eulerian split needs two spanning trees");
  }
  std::vector<char> in_t1(g.edge_count(), 0);
  for (EdgeId e : t1) in_t1[e] = 1;
  for (EdgeId e : t2) {
    if (in_t1[e]) throw Error(ErrorCode::kInvalidInput, "T1 and T2 share an edge");
  }
  const VertexSet q = odd_vertices(g, t1);
  const EdgeSet forest = parity_forest(g, t2, q);
  EulerianSplit split;
  split.eulerian.assign(t1.begin(), t1.end());
  split.eulerian.insert(split.eulerian.end(), forest.begin(), forest.end());
  std::sort(split.eulerian.begin(), split.eulerian.end());
  for (EdgeId e : t2) {
    if (!std::binary_search(forest.begin(), forest.end(), e)) split.leftovers.push_back(e);
  }
  std::sort(split.leftovers.begin(), split.leftovers.end());
  return split;
}

std::optional<PartitionDecomposition> is_partition_connected(const MultiGraph& g,
                                                              const PartitionSpec& spec) {
  if (spec.m < 1) throw Error(ErrorCode::kInvalidInput, "partition spec needs m >= 1");
  require_total(g, spec.l0, "l0");
  std::vector<VertexId> slots;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (spec.l0[v] < 0) throw Error(ErrorCode::kInvalidInput, "l0 must be nonnegative");
    if (spec.l0[v] > g.degree(v)) return std::nullopt;
    slots.insert(slots.end(), static_cast<std::size_t>(spec.l0[v]), v);
  }
  if (g.vertex_count() == 0) return std::nullopt;
  detail::MatroidPartition part(g, spec.m, std::move(slots));
  part.fill();
  if (!part.complete()) return std::nullopt;

  PartitionDecomposition dec;
  dec.trees = part.forest_edges();
  dec.tree_factor = sorted_union(dec.trees);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const int c = part.owner()[e];
    if (c >= 0 && c < part.forest_count()) continue;
    dec.rest.push_back(e);
    if (c >= 0) {
      dec.rest_tails.push_back(part.slot_vertex(c));
      dec.floor_edges.push_back(e);
    } else {
      dec.rest_tails.push_back(g.edge(e).u);
    }
  }
  return dec;
}

void validate_decomposition(const MultiGraph& g, const PartitionSpec& spec,
                            const PartitionDecomposition& dec) {
  if (static_cast<int>(dec.trees.size()) != spec.m) {
    throw Error(ErrorCode::kInvalidInput, "decomposition has the wrong number of trees");
  }
  TreePacking packing{dec.trees, dec.rest};
  validate_packing(g, packing);
  if (dec.tree_factor != sorted_union(dec.trees)) {
    throw Error(ErrorCode::kInvalidInput, "tree factor is not the union of the trees");
  }
  if (dec.rest_tails.size() != dec.rest.size()) {
    throw Error(ErrorCode::kInvalidInput, "rest orientation is incomplete");
  }
  std::vector<std::int64_t> out(g.vertex_count(), 0);
  for (std::size_t i = 0; i < dec.rest.size(); ++i) {
    const Edge& e = g.edge(dec.rest[i]);
    if (dec.rest_tails[i] != e.u && dec.rest_tails[i] != e.v) {
      throw Error(ErrorCode::kInvalidInput, "rest tail is not an end of its edge");
    }
    ++out[dec.rest_tails[i]];
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (out[v] < spec.l0[v]) {
      throw Error(ErrorCode::kInvalidInput, "rest factor misses the floor at vertex " +
                                                std::to_string(v));
    }
  }
}

bool for_each_lift_choice(
    const MultiGraph& g, VertexId z, int count,
    const std::function<bool(std::span<const std::pair<VertexId, VertexId>>)>& visit) {
  std::vector<int> mult(g.vertex_count(), 0);
  for (EdgeId e : g.incident(z)) ++mult[g.other_end(e, z)];
  std::vector<std::pair<VertexId, VertexId>> kinds;
  for (VertexId x = 0; x < g.vertex_count(); ++x) {
    for (VertexId y = x + 1; y < g.vertex_count(); ++y) {
      if (mult[x] > 0 && mult[y] > 0) kinds.emplace_back(x, y);
    }
  }
  std::vector<std::pair<VertexId, VertexId>> chosen;
  std::function<bool(std::size_t)> rec = [&](std::size_t from) -> bool {
    if (static_cast<int>(chosen.size()) == count) return visit(chosen);
    for (std::size_t i = from; i < kinds.size(); ++i) {
      const auto [x, y] = kinds[i];
      if (mult[x] == 0 || mult[y] == 0) continue;
      --mult[x];
      --mult[y];
      chosen.push_back(kinds[i]);
      const bool done = rec(i);
      chosen.pop_back();
      ++mult[x];
      ++mult[y];
      if (done) return true;
    }
    return false;
  };
  return rec(0);
}

LiftResult apply_lifts(const MultiGraph& g, VertexId z,
                       std::span<const std::pair<VertexId, VertexId>> neighbour_pairs) {
  if (!g.valid_vertex(z)) throw Error(ErrorCode::kInvalidInput, "lift vertex out of range");
  std::vector<char> used(g.edge_count(), 0);
  auto take = [&](VertexId w) {
    for (EdgeId e : g.incident(z)) {
      if (!used[e] && g.other_end(e, z) == w) {
        used[e] = 1;
        return e;
      }
    }
    throw Error(ErrorCode::kInvalidInput, "not enough edges between the pivot and " +
                                              std::to_string(w));
  };
  LiftResult out{MultiGraph(), {}, {}, {}, {}};
  for (const auto& [x, y] : neighbour_pairs) {
    if (x == y) throw Error(ErrorCode::kInvalidInput, "lifting would create a loop");
    const EdgeId e1 = take(x);
    const EdgeId e2 = take(y);
    out.lifted_pairs.emplace_back(e1, e2);
  }
  out.vertex_map.assign(g.vertex_count(), -1);
  VertexId next = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (v != z) out.vertex_map[v] = next++;
  }
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.u == z || ed.v == z) {
      if (!used[e]) out.unlifted.push_back(e);
      continue;
    }
    edges.push_back({out.vertex_map[ed.u], out.vertex_map[ed.v]});
    out.origin.emplace_back(e, -1);
  }
  for (const auto& [e1, e2] : out.lifted_pairs) {
    edges.push_back({out.vertex_map[g.other_end(e1, z)], out.vertex_map[g.other_end(e2, z)]});
    out.origin.emplace_back(e1, e2);
  }
  out.graph = MultiGraph(next, std::move(edges));
  return out;
}

LiftResult lift_preserving(const MultiGraph& g, VertexId z, const PartitionSpec& spec,
                           const LiftOptions& options) {
  if (!g.valid_vertex(z)) throw Error(ErrorCode::kInvalidInput, "lift vertex out of range");
  if (g.vertex_count() < 2) throw Error(ErrorCode::kInvalidInput, "lifting needs 2 vertices");
  const auto dec = is_partition_connected(g, spec);
  if (!dec) {
    throw Error(ErrorCode::kPrecondition, "graph has no (" + std::to_string(spec.m) +
                                              ", l0)-partition-connected factor");
  }
  int factor_degree = 0;
  for (EdgeId e : dec->tree_factor) factor_degree += g.edge(e).u == z || g.edge(e).v == z;
  for (EdgeId e : dec->floor_edges) factor_degree += g.edge(e).u == z || g.edge(e).v == z;
  const std::int64_t l0z = spec.l0[z];
  if (g.degree(z) < 2 * factor_degree - 2 * l0z - 2) {
    throw Error(ErrorCode::kPrecondition,
                "d_G(z) = " + std::to_string(g.degree(z)) + " is below 2 d_H(z) - 2 l0(z) - 2 = " +
                    std::to_string(2 * factor_degree - 2 * l0z - 2));
  }
  const int count = options.pair_count.value_or(static_cast<int>(factor_degree - l0z - 1));
  if (count < 0 || 2 * count > g.degree(z)) {
    throw Error(ErrorCode::kPrecondition, "cannot lift " + std::to_string(count) +
                                              " pairs at a vertex of degree " +
                                              std::to_string(g.degree(z)));
  }
  PartitionSpec sub{spec.m, VertexIntMap(g.vertex_count() - 1)};
  for (VertexId v = 0, w = 0; v < g.vertex_count(); ++v) {
    if (v != z) sub.l0[w++] = spec.l0[v];
  }

  std::optional<LiftResult> found;
  int budget = options.verification_budget;
  for_each_lift_choice(g, z, count, [&](std::span<const std::pair<VertexId, VertexId>> pairs) {
    if (budget-- <= 0) return true;
    LiftResult candidate = apply_lifts(g, z, pairs);
    if (is_partition_connected(candidate.graph, sub)) {
      found = std::move(candidate);
      return true;
    }
    return false;
  });
  if (!found) {
    throw Error(ErrorCode::kSearchExhausted,
                budget < 0 ? "lift search budget exhausted"
                           : "no lifting of " + std::to_string(count) +
                                 " pairs preserves partition-connectivity");
  }
  return *std::move(found);
}

}  // namespace orient
