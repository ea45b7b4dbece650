#include "orient/max_flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "orient/error.hpp"

namespace orient {

namespace {
constexpr Capacity kUnbounded = std::numeric_limits<Capacity>::max() / 4;
}

FlowNetwork::FlowNetwork(int node_count) : adjacency_(node_count) {}

int FlowNetwork::add_node() {
  adjacency_.emplace_back();
  return node_count() - 1;
}

int FlowNetwork::add_arc(int from, int to, Capacity capacity) {
  if (from < 0 || to < 0 || from >= node_count() || to >= node_count()) {
    throw Error(ErrorCode::kInternal, "flow arc endpoint out of range");
  }
  if (capacity < 0) throw Error(ErrorCode::kInternal, "negative arc capacity");
  const int id = static_cast<int>(arcs_.size());
  arcs_.push_back({to, capacity, capacity});
  arcs_.push_back({from, 0, 0});
  adjacency_[from].push_back(id);
  adjacency_[to].push_back(id + 1);
  return id;
}

bool FlowNetwork::build_levels(int source, int sink) {
  level_.assign(node_count(), -1);
  std::queue<int> queue;
  level_[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop();
    for (int a : adjacency_[v]) {
      const Arc& arc = arcs_[a];
      if (arc.residual > 0 && level_[arc.to] < 0) {
        level_[arc.to] = level_[v] + 1;
        queue.push(arc.to);
      }
    }
  }
  return level_[sink] >= 0;
}

Capacity FlowNetwork::push(int node, int sink, Capacity limit) {
  if (node == sink) return limit;
  for (std::size_t& i = cursor_[node]; i < adjacency_[node].size(); ++i) {
    const int a = adjacency_[node][i];
    Arc& arc = arcs_[a];
    if (arc.residual <= 0 || level_[arc.to] != level_[node] + 1) continue;
    const Capacity pushed = push(arc.to, sink, std::min(limit, arc.residual));
    if (pushed > 0) {
      arc.residual -= pushed;
      arcs_[a ^ 1].residual += pushed;
      return pushed;
    }
  }
  return 0;
}

Capacity FlowNetwork::max_flow(int source, int sink) {
  for (Arc& arc : arcs_) arc.residual = arc.capacity;
  if (source == sink) return 0;
  Capacity total = 0;
  while (build_levels(source, sink)) {
    cursor_.assign(node_count(), 0);
    while (const Capacity f = push(source, sink, kUnbounded)) total += f;
  }
  return total;
}

Capacity FlowNetwork::flow(int arc) const {
  return arcs_[arc].capacity - arcs_[arc].residual;
}

std::vector<char> FlowNetwork::residual_reachable(int source) const {
  std::vector<char> seen(node_count(), 0);
  std::queue<int> queue;
  seen[source] = 1;
  queue.push(source);
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop();
    for (int a : adjacency_[v]) {
      const Arc& arc = arcs_[a];
      if (arc.residual > 0 && !seen[arc.to]) {
        seen[arc.to] = 1;
        queue.push(arc.to);
      }
    }
  }
  return seen;
}

int BoundedCirculation::add_arc(int from, int to, Capacity lower, Capacity upper) {
  if (lower > upper) throw Error(ErrorCode::kInternal, "arc lower bound exceeds upper bound");
  arcs_.push_back({from, to, lower, upper});
  return static_cast<int>(arcs_.size()) - 1;
}

std::optional<std::vector<Capacity>> BoundedCirculation::solve() const {
  FlowNetwork net(node_count_ + 2);
  const int s = node_count_;
  const int t = node_count_ + 1;
  std::vector<Capacity> excess(node_count_, 0);
  std::vector<int> ids(arcs_.size());
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    const Arc& a = arcs_[i];
    ids[i] = net.add_arc(a.from, a.to, a.upper - a.lower);
    excess[a.to] += a.lower;
    excess[a.from] -= a.lower;
  }
  Capacity demand = 0;
  for (int v = 0; v < node_count_; ++v) {
    if (excess[v] > 0) {
      net.add_arc(s, v, excess[v]);
      demand += excess[v];
    } else if (excess[v] < 0) {
      net.add_arc(v, t, -excess[v]);
    }
  }
  if (net.max_flow(s, t) != demand) return std::nullopt;
  std::vector<Capacity> flows(arcs_.size());
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    flows[i] = arcs_[i].lower + net.flow(ids[i]);
  }
  return flows;
}

}  // namespace orient
