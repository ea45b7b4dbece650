#include "orient/generators.hpp"

#include <algorithm>
#include <vector>

#include "orient/error.hpp"

namespace orient::gen {

namespace {

void require_vertices(int n, int least) {
  if (n < least) {
    throw Error(ErrorCode::kInvalidInput, "generator needs at least " + std::to_string(least) +
                                              " vertices");
  }
}

std::vector<Edge> tree_edges(Rng& rng, int n) {
  std::vector<VertexId> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    edges.push_back({order[pick(rng)], order[i]});
  }
  return edges;
}

Edge random_edge(Rng& rng, int n) {
  std::uniform_int_distribution<int> pick(0, n - 1);
  const VertexId u = pick(rng);
  VertexId v = pick(rng);
  while (v == u) v = pick(rng);
  return {u, v};
}

}  // namespace

MultiGraph path(int n) {
  require_vertices(n, 1);
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return MultiGraph(n, std::move(edges));
}

MultiGraph cycle(int n) {
  require_vertices(n, 3);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return MultiGraph(n, std::move(edges));
}

MultiGraph star(int leaves) {
  require_vertices(leaves, 0);
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return MultiGraph(leaves + 1, std::move(edges));
}

MultiGraph complete(int n) {
  require_vertices(n, 1);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return MultiGraph(n, std::move(edges));
}

MultiGraph multiply(const MultiGraph& g, int times) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    for (int i = 0; i < times; ++i) edges.push_back(e);
  }
  return MultiGraph(g.vertex_count(), std::move(edges));
}

MultiGraph triangle_times(int k) {
  return multiply(MultiGraph(3, {{0, 1}, {1, 2}, {0, 2}}), k);
}

MultiGraph random_tree(Rng& rng, int n) {
  require_vertices(n, 1);
  return MultiGraph(n, tree_edges(rng, n));
}

MultiGraph random_connected(Rng& rng, int n, int edges) {
  require_vertices(n, 1);
  if (edges < n - 1) throw Error(ErrorCode::kInvalidInput, "too few edges to connect");
  std::vector<Edge> all = tree_edges(rng, n);
  if (n >= 2) {
    while (static_cast<int>(all.size()) < edges) all.push_back(random_edge(rng, n));
  }
  std::shuffle(all.begin(), all.end(), rng);
  return MultiGraph(n, std::move(all));
}

MultiGraph random_tree_connected(Rng& rng, int n, int trees, int extra) {
  require_vertices(n, 1);
  std::vector<Edge> all;
  for (int t = 0; t < trees; ++t) {
    auto part = tree_edges(rng, n);
    all.insert(all.end(), part.begin(), part.end());
  }
  if (n >= 2) {
    for (int i = 0; i < extra; ++i) all.push_back(random_edge(rng, n));
  }
  std::shuffle(all.begin(), all.end(), rng);
  return MultiGraph(n, std::move(all));
}

MultiGraph random_edge_connected(Rng& rng, int n, int lambda) {
  require_vertices(n, 2);
  std::vector<Edge> all = tree_edges(rng, n);
  while (edge_connectivity(MultiGraph(n, all)) < lambda) all.push_back(random_edge(rng, n));
  std::shuffle(all.begin(), all.end(), rng);
  return MultiGraph(n, std::move(all));
}

}  // namespace orient::gen
