#include "matroid_partition.hpp"

#include <queue>

#include "orient/error.hpp"

namespace orient::detail {

MatroidPartition::MatroidPartition(const MultiGraph& g, int forests,
                                   std::vector<VertexId> slot_vertices)
    : g_(g),
      forests_(forests),
      slots_(std::move(slot_vertices)),
      owner_(g.edge_count(), -1),
      slot_occupant_(slots_.size(), -1),
      forest_adj_(forests, std::vector<std::vector<EdgeId>>(g.vertex_count())),
      forest_size_(forests, 0) {
  capacity_ = forests * std::max(0, g.vertex_count() - 1) + static_cast<int>(slots_.size());
}

std::vector<EdgeSet> MatroidPartition::forest_edges() const {
  std::vector<EdgeSet> out(forests_);
  for (EdgeId e = 0; e < g_.edge_count(); ++e) {
    if (owner_[e] >= 0 && owner_[e] < forests_) out[owner_[e]].push_back(e);
  }
  return out;
}

void MatroidPartition::rebuild_forest(int forest) {
  for (auto& list : forest_adj_[forest]) list.clear();
  forest_size_[forest] = 0;
  for (EdgeId e = 0; e < g_.edge_count(); ++e) {
    if (owner_[e] != forest) continue;
    forest_adj_[forest][g_.edge(e).u].push_back(e);
    forest_adj_[forest][g_.edge(e).v].push_back(e);
    ++forest_size_[forest];
  }
}

std::vector<EdgeId> MatroidPartition::forest_cycle(int forest, EdgeId e) const {
  const VertexId from = g_.edge(e).u;
  const VertexId to = g_.edge(e).v;
  std::vector<EdgeId> via(g_.vertex_count(), -1);
  std::vector<char> seen(g_.vertex_count(), 0);
  std::queue<VertexId> queue;
  queue.push(from);
  seen[from] = 1;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop();
    if (v == to) break;
    for (EdgeId f : forest_adj_[forest][v]) {
      const VertexId w = g_.other_end(f, v);
      if (!seen[w]) {
        seen[w] = 1;
        via[w] = f;
        queue.push(w);
      }
    }
  }
  std::vector<EdgeId> path;
  if (!seen[to]) return path;
  for (VertexId v = to; v != from;) {
    const EdgeId f = via[v];
    path.push_back(f);
    v = g_.other_end(f, v);
  }
  return path;
}

bool MatroidPartition::forest_accepts(int forest, EdgeId e) const {
  return forest_cycle(forest, e).empty();
}

bool MatroidPartition::insert(EdgeId x) {
  if (owner_[x] >= 0) return true;
  const int components = forests_ + static_cast<int>(slots_.size());
  // label[e] = (edge that takes e's place, component where it happens).
  std::vector<EdgeId> label_edge(g_.edge_count(), -1);
  std::vector<char> labeled(g_.edge_count(), 0);
  std::queue<EdgeId> queue;
  queue.push(x);
  labeled[x] = 1;

  EdgeId end_edge = -1;
  int end_component = -1;
  while (!queue.empty() && end_edge < 0) {
    const EdgeId y = queue.front();
    queue.pop();
    const Edge& ye = g_.edge(y);
    for (int c = 0; c < components && end_edge < 0; ++c) {
      if (c == owner_[y]) continue;
      if (c < forests_) {
        const auto cycle = forest_cycle(c, y);
        if (cycle.empty()) {
          end_edge = y;
          end_component = c;
          break;
        }
        for (EdgeId f : cycle) {
          if (!labeled[f]) {
            labeled[f] = 1;
            label_edge[f] = y;
            queue.push(f);
          }
        }
      } else {
        const VertexId v = slots_[c - forests_];
        if (ye.u != v && ye.v != v) continue;
        const EdgeId occupant = slot_occupant_[c - forests_];
        if (occupant < 0) {
          end_edge = y;
          end_component = c;
          break;
        }
        if (!labeled[occupant]) {
          labeled[occupant] = 1;
          label_edge[occupant] = y;
          queue.push(occupant);
        }
      }
    }
  }
  if (end_edge < 0) return false;

  // Walk back: each edge moves to the component vacated by its successor.
  std::vector<int> touched;
  EdgeId cur = end_edge;
  int target = end_component;
  while (true) {
    const int old = owner_[cur];
    owner_[cur] = target;
    touched.push_back(target);
    if (target >= forests_) slot_occupant_[target - forests_] = cur;
    if (cur == x) break;
    if (old < 0) throw Error(ErrorCode::kInternal, "exchange path left an edge unowned");
    touched.push_back(old);
    cur = label_edge[cur];
    target = old;
  }
  for (int c : touched) {
    if (c < forests_) rebuild_forest(c);
  }
  ++assigned_;
  return true;
}

void MatroidPartition::fill() {
  for (EdgeId e = 0; e < g_.edge_count() && !complete(); ++e) insert(e);
}

}  // namespace orient::detail
