#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace orient {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<VertexId>;
using EdgeSet = std::vector<EdgeId>;

struct Edge {
  VertexId u;
  VertexId v;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Loopless undirected multigraph.  Parallel edges are distinct entries with
/// their own EdgeId; ids are dense and follow insertion order.  Immutable once
/// built.
class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(int vertex_count);
  MultiGraph(int vertex_count, std::vector<Edge> edges);
  MultiGraph(int vertex_count, std::initializer_list<Edge> edges)
      : MultiGraph(vertex_count, std::vector<Edge>(edges)) {}

  int vertex_count() const noexcept { return vertex_count_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const;
  std::span<const Edge> edges() const noexcept { return edges_; }

  int degree(VertexId v) const;
  std::span<const int> degrees() const noexcept { return degrees_; }

  /// Incident edge ids of v in ascending order.
  std::span<const EdgeId> incident(VertexId v) const;

  VertexId other_end(EdgeId e, VertexId v) const;

  bool valid_vertex(VertexId v) const noexcept {
    return v >= 0 && v < vertex_count_;
  }
  bool valid_edge(EdgeId e) const noexcept {
    return e >= 0 && e < edge_count();
  }

  // Structural fingerprint used to tie orientations to their graph.
  std::uint64_t signature() const noexcept { return signature_; }

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> degrees_;
  std::vector<std::vector<EdgeId>> incidence_;
  std::uint64_t signature_ = 0;
};

// Integer value attached to every vertex (bounds, targets, residues, floors).
class VertexIntMap {
 public:
  VertexIntMap() = default;
  explicit VertexIntMap(int size, std::int64_t fill = 0) : values_(size, fill) {}
  explicit VertexIntMap(std::vector<std::int64_t> values)
      : values_(std::move(values)) {}
  VertexIntMap(std::initializer_list<std::int64_t> values) : values_(values) {}

  int size() const noexcept { return static_cast<int>(values_.size()); }
  std::int64_t& operator[](VertexId v) { return values_[v]; }
  std::int64_t operator[](VertexId v) const { return values_[v]; }
  std::int64_t at(VertexId v) const;

  std::int64_t sum() const noexcept;
  std::span<const std::int64_t> values() const noexcept { return values_; }

  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  friend bool operator==(const VertexIntMap&, const VertexIntMap&) = default;

 private:
  std::vector<std::int64_t> values_;
};

// Throws kInvalidInput unless map has one entry per vertex of g.
void require_total(const MultiGraph& g, const VertexIntMap& map, const char* name);

/// chi_z: 1 at z, 0 elsewhere.
struct Indicator {
  VertexId z;

  int operator()(VertexId v) const noexcept { return v == z ? 1 : 0; }
  int complement(VertexId v) const noexcept { return 1 - (*this)(v); }
};

enum class Direction : std::uint8_t {
  kForward,   // u -> v
  kBackward,  // v -> u
};

/// Direction for every edge of one graph, with cached out-degrees.
class Orientation {
 public:
  Orientation() = default;
  Orientation(const MultiGraph& g, std::vector<Direction> directions);

  static Orientation all_forward(const MultiGraph& g);

  int vertex_count() const noexcept { return static_cast<int>(out_.size()); }
  int edge_count() const noexcept { return static_cast<int>(directions_.size()); }

  Direction direction(EdgeId e) const { return directions_.at(e); }
  std::span<const Direction> directions() const noexcept { return directions_; }

  int out_degree(VertexId v) const;
  int in_degree(VertexId v) const;
  std::span<const int> out_degrees() const noexcept { return out_; }

  VertexId tail(const MultiGraph& g, EdgeId e) const;
  VertexId head(const MultiGraph& g, EdgeId e) const;

  Orientation reversed() const;

  bool belongs_to(const MultiGraph& g) const noexcept;

  friend bool operator==(const Orientation& a, const Orientation& b) {
    return a.signature_ == b.signature_ && a.directions_ == b.directions_;
  }

 private:
  std::uint64_t signature_ = 0;
  std::vector<Direction> directions_;
  std::vector<int> out_;
  std::vector<int> in_;
};

// Orientation in which `tail[e]` is the tail of edge e.
Orientation orientation_from_tails(const MultiGraph& g, std::span<const VertexId> tails);

int degree(const MultiGraph& g, VertexId v);
int out_degree(const Orientation& d, VertexId v);

/// d_G(S): edges with exactly one end in S.
int cut_size(const MultiGraph& g, std::span<const VertexId> s);

/// e_G(S): edges with both ends in S.
int internal_edges(const MultiGraph& g, std::span<const VertexId> s);

/// Global minimum cut (Stoer-Wagner over edge multiplicities).  Zero for a
/// disconnected graph.
int edge_connectivity(const MultiGraph& g);

/// Removes e1 = xu and e2 = uy and appends xy.  The surviving edges keep their
/// relative order; the new edge gets the last id.
MultiGraph lift(const MultiGraph& g, EdgeId e1, EdgeId e2, VertexId pivot);

/// Spanning subgraph on the same vertex set keeping `edges` in the given order
/// (edge i of the result is edges[i] of g).
MultiGraph edge_subgraph(const MultiGraph& g, std::span<const EdgeId> edges);

bool is_connected(const MultiGraph& g);

VertexSet normalize_set(const MultiGraph& g, std::vector<VertexId> s);

// Copies directions of an orientation of edge_subgraph(g, edges) into `out`.
void scatter_directions(std::span<const EdgeId> edges, const Orientation& sub,
                        std::vector<Direction>& out);

}  // namespace orient
