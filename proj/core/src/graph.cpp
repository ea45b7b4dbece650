#include "orient/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>
#include <string>

#include "orient/error.hpp"
#include "orient/rational.hpp"

namespace orient {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput: return "INVALID_INPUT";
    case ErrorCode::kPrecondition: return "PRECONDITION";
    case ErrorCode::kInfeasible: return "INFEASIBLE";
    case ErrorCode::kSumMismatch: return "SUM_MISMATCH";
    case ErrorCode::kNonIntegral: return "NON_INTEGRAL";
    case ErrorCode::kInsufficientConnectivity: return "INSUFFICIENT_CONNECTIVITY";
    case ErrorCode::kBudgetExceeded: return "BUDGET_EXCEEDED";
    case ErrorCode::kSearchExhausted: return "SEARCH_EXHAUSTED";
    case ErrorCode::kIndeterminate: return "INDETERMINATE";
    case ErrorCode::kStageFailure: return "STAGE_FAILURE";
    case ErrorCode::kInternal: return "INTERNAL";
  }
  return "UNKNOWN";
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const auto value = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return Rational(value);
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    const auto n = std::stoll(num, &used);
    if (used != num.size()) throw std::invalid_argument(text);
    const auto d = std::stoll(den, &used);
    if (used != den.size() || d == 0) throw std::invalid_argument(text);
    return Rational(n, d);
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::kInvalidInput, "malformed rational '" + text + "'");
  }
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

std::uint64_t fingerprint(int vertex_count, std::span<const Edge> edges) {
  // FNV-1a over (n, u0, v0, u1, v1, ...).
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xffU;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(vertex_count));
  for (const Edge& e : edges) {
    mix(static_cast<std::uint64_t>(e.u));
    mix(static_cast<std::uint64_t>(e.v));
  }
  return h;
}

void check_vertex(const MultiGraph& g, VertexId v) {
  if (!g.valid_vertex(v)) {
    throw Error(ErrorCode::kInvalidInput,
                "vertex " + std::to_string(v) + " out of range");
  }
}

}  // namespace

MultiGraph::MultiGraph(int vertex_count) : MultiGraph(vertex_count, {}) {}

MultiGraph::MultiGraph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count < 0) {
    throw Error(ErrorCode::kInvalidInput, "negative vertex count");
  }
  degrees_.assign(vertex_count_, 0);
  incidence_.assign(vertex_count_, {});
  for (EdgeId e = 0; e < edge_count(); ++e) {
    const Edge& ed = edges_[e];
    if (!valid_vertex(ed.u) || !valid_vertex(ed.v)) {
      throw Error(ErrorCode::kInvalidInput,
                  "edge " + std::to_string(e) + " has an endpoint out of range");
    }
    if (ed.u == ed.v) {
      throw Error(ErrorCode::kInvalidInput,
                  "edge " + std::to_string(e) + " is a loop");
    }
    ++degrees_[ed.u];
    ++degrees_[ed.v];
    incidence_[ed.u].push_back(e);
    incidence_[ed.v].push_back(e);
  }
  signature_ = fingerprint(vertex_count_, edges_);
}

const Edge& MultiGraph::edge(EdgeId e) const {
  if (!valid_edge(e)) {
    throw Error(ErrorCode::kInvalidInput, "edge " + std::to_string(e) + " out of range");
  }
  return edges_[e];
}

int MultiGraph::degree(VertexId v) const {
  check_vertex(*this, v);
  return degrees_[v];
}

std::span<const EdgeId> MultiGraph::incident(VertexId v) const {
  check_vertex(*this, v);
  return incidence_[v];
}

VertexId MultiGraph::other_end(EdgeId e, VertexId v) const {
  const Edge& ed = edge(e);
  if (ed.u == v) return ed.v;
  if (ed.v == v) return ed.u;
  throw Error(ErrorCode::kInvalidInput, "vertex " + std::to_string(v) +
                                            " is not an end of edge " + std::to_string(e));
}

std::int64_t VertexIntMap::at(VertexId v) const {
  if (v < 0 || v >= size()) {
    throw Error(ErrorCode::kInvalidInput, "vertex map has no entry for " + std::to_string(v));
  }
  return values_[v];
}

std::int64_t VertexIntMap::sum() const noexcept {
  return std::accumulate(values_.begin(), values_.end(), std::int64_t{0});
}

void require_total(const MultiGraph& g, const VertexIntMap& map, const char* name) {
  if (map.size() != g.vertex_count()) {
    throw Error(ErrorCode::kInvalidInput,
                std::string(name) + " must have one value per vertex (" +
                    std::to_string(g.vertex_count()) + "), got " +
                    std::to_string(map.size()));
  }
}

Orientation::Orientation(const MultiGraph& g, std::vector<Direction> directions)
    : signature_(g.signature()), directions_(std::move(directions)) {
  if (static_cast<int>(directions_.size()) != g.edge_count()) {
    throw Error(ErrorCode::kInvalidInput, "orientation size does not match edge count");
  }
  out_.assign(g.vertex_count(), 0);
  in_.assign(g.vertex_count(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    const bool fwd = directions_[e] == Direction::kForward;
    ++out_[fwd ? ed.u : ed.v];
    ++in_[fwd ? ed.v : ed.u];
  }
}

Orientation Orientation::all_forward(const MultiGraph& g) {
  return Orientation(g, std::vector<Direction>(g.edge_count(), Direction::kForward));
}

int Orientation::out_degree(VertexId v) const {
  if (v < 0 || v >= vertex_count()) {
    throw Error(ErrorCode::kInvalidInput, "vertex " + std::to_string(v) + " out of range");
  }
  return out_[v];
}

int Orientation::in_degree(VertexId v) const {
  if (v < 0 || v >= vertex_count()) {
    throw Error(ErrorCode::kInvalidInput, "vertex " + std::to_string(v) + " out of range");
  }
  return in_[v];
}

VertexId Orientation::tail(const MultiGraph& g, EdgeId e) const {
  const Edge& ed = g.edge(e);
  return directions_.at(e) == Direction::kForward ? ed.u : ed.v;
}

VertexId Orientation::head(const MultiGraph& g, EdgeId e) const {
  const Edge& ed = g.edge(e);
  return directions_.at(e) == Direction::kForward ? ed.v : ed.u;
}

Orientation Orientation::reversed() const {
  Orientation r = *this;
  for (Direction& d : r.directions_) {
    d = d == Direction::kForward ? Direction::kBackward : Direction::kForward;
  }
  std::swap(r.out_, r.in_);
  return r;
}

bool Orientation::belongs_to(const MultiGraph& g) const noexcept {
  return signature_ == g.signature() && edge_count() == g.edge_count();
}

Orientation orientation_from_tails(const MultiGraph& g, std::span<const VertexId> tails) {
  if (static_cast<int>(tails.size()) != g.edge_count()) {
    throw Error(ErrorCode::kInvalidInput, "tail list size does not match edge count");
  }
  std::vector<Direction> dirs(tails.size());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (tails[e] == ed.u) {
      dirs[e] = Direction::kForward;
    } else if (tails[e] == ed.v) {
      dirs[e] = Direction::kBackward;
    } else {
      throw Error(ErrorCode::kInvalidInput, "tail is not an end of edge " + std::to_string(e));
    }
  }
  return Orientation(g, std::move(dirs));
}

int degree(const MultiGraph& g, VertexId v) { return g.degree(v); }

int out_degree(const Orientation& d, VertexId v) { return d.out_degree(v); }

namespace {

std::vector<char> membership(const MultiGraph& g, std::span<const VertexId> s) {
  std::vector<char> in(g.vertex_count(), 0);
  for (VertexId v : s) {
    check_vertex(g, v);
    in[v] = 1;
  }
  return in;
}

}  // namespace

int cut_size(const MultiGraph& g, std::span<const VertexId> s) {
  const auto in = membership(g, s);
  int count = 0;
  for (const Edge& e : g.edges()) count += in[e.u] != in[e.v];
  return count;
}

int internal_edges(const MultiGraph& g, std::span<const VertexId> s) {
  const auto in = membership(g, s);
  int count = 0;
  for (const Edge& e : g.edges()) count += in[e.u] && in[e.v];
  return count;
}

int edge_connectivity(const MultiGraph& g) {
  const int n = g.vertex_count();
  if (n < 2) {
    throw Error(ErrorCode::kInvalidInput, "edge connectivity needs at least 2 vertices");
  }
  std::vector<std::vector<long long>> w(n, std::vector<long long>(n, 0));
  for (const Edge& e : g.edges()) {
    ++w[e.u][e.v];
    ++w[e.v][e.u];
  }
  // Stoer-Wagner.
  std::vector<int> alive(n);
  std::iota(alive.begin(), alive.end(), 0);
  long long best = std::numeric_limits<long long>::max();
  while (alive.size() > 1) {
    const int m = static_cast<int>(alive.size());
    std::vector<long long> key(m, 0);
    std::vector<char> added(m, 0);
    int prev = -1;
    int last = -1;
    for (int step = 0; step < m; ++step) {
      int pick = -1;
      for (int i = 0; i < m; ++i) {
        if (!added[i] && (pick < 0 || key[i] > key[pick])) pick = i;
      }
      added[pick] = 1;
      prev = last;
      last = pick;
      if (step == m - 1) best = std::min(best, key[pick]);
      for (int i = 0; i < m; ++i) {
        if (!added[i]) key[i] += w[alive[pick]][alive[i]];
      }
    }
    const int s = alive[prev];
    const int t = alive[last];
    for (int i = 0; i < n; ++i) {
      w[s][i] += w[t][i];
      w[i][s] = w[s][i];
    }
    w[s][s] = 0;
    alive.erase(alive.begin() + last);
  }
  return static_cast<int>(best);
}

MultiGraph lift(const MultiGraph& g, EdgeId e1, EdgeId e2, VertexId pivot) {
  check_vertex(g, pivot);
  if (e1 == e2) {
    throw Error(ErrorCode::kInvalidInput, "lifting needs two distinct edges");
  }
  const Edge& a = g.edge(e1);
  const Edge& b = g.edge(e2);
  if ((a.u != pivot && a.v != pivot) || (b.u != pivot && b.v != pivot)) {
    throw Error(ErrorCode::kInvalidInput, "lifted edges must share the pivot vertex");
  }
  const VertexId x = g.other_end(e1, pivot);
  const VertexId y = g.other_end(e2, pivot);
  if (x == y) {
    throw Error(ErrorCode::kInvalidInput, "lifting would create a loop");
  }
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() - 1);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (e != e1 && e != e2) edges.push_back(g.edge(e));
  }
  edges.push_back({x, y});
  return MultiGraph(g.vertex_count(), std::move(edges));
}

MultiGraph edge_subgraph(const MultiGraph& g, std::span<const EdgeId> edges) {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (EdgeId e : edges) out.push_back(g.edge(e));
  return MultiGraph(g.vertex_count(), std::move(out));
}

bool is_connected(const MultiGraph& g) {
  if (g.vertex_count() <= 1) return true;
  std::vector<char> seen(g.vertex_count(), 0);
  std::queue<VertexId> queue;
  queue.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop();
    for (EdgeId e : g.incident(v)) {
      const VertexId w = g.other_end(e, v);
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        queue.push(w);
      }
    }
  }
  return reached == g.vertex_count();
}

VertexSet normalize_set(const MultiGraph& g, std::vector<VertexId> s) {
  for (VertexId v : s) check_vertex(g, v);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

void scatter_directions(std::span<const EdgeId> edges, const Orientation& sub,
                        std::vector<Direction>& out) {
  if (static_cast<int>(edges.size()) != sub.edge_count()) {
    throw Error(ErrorCode::kInternal, "sub-orientation does not match its edge list");
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out.at(edges[i]) = sub.direction(static_cast<EdgeId>(i));
  }
}

}  // namespace orient
