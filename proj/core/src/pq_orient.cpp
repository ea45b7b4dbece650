#include "orient/pq_orient.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "orient/error.hpp"
#include "orient/flow_orient.hpp"
#include "orient/tree_packing.hpp"

namespace orient {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

std::vector<int> degrees_within(const MultiGraph& g, std::span<const EdgeId> edges) {
  std::vector<int> deg(g.vertex_count(), 0);
  for (EdgeId e : edges) {
    ++deg[g.edge(e).u];
    ++deg[g.edge(e).v];
  }
  return deg;
}

EdgeSet merge(std::vector<EdgeSet> parts) {
  EdgeSet out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  return out;
}

EdgeSet complement(const MultiGraph& g, const EdgeSet& used_sorted) {
  EdgeSet out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!std::binary_search(used_sorted.begin(), used_sorted.end(), e)) out.push_back(e);
  }
  return out;
}

int available_trees(const MultiGraph& g) {
  return g.vertex_count() < 2 ? 0 : tree_connectivity(g);
}

}  // namespace

int defective_tree_requirement(int k) { return 3 * k * (k - 1) / 2 + (k - 1); }

int exact_tree_requirement(int k) { return 4 * k * k; }

void validate_pq_spec(const MultiGraph& g, const PQSpec& spec) {
  require_total(g, spec.p, "p");
  require_total(g, spec.q, "q");
  if (spec.k < 1) throw Error(ErrorCode::kInvalidInput, "k must be positive");
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const std::int64_t d = g.degree(v);
    if (2 * spec.p[v] > d || 2 * spec.q[v] < d) {
      throw Error(ErrorCode::kInvalidInput,
                  "vertex " + std::to_string(v) + " violates p <= d/2 <= q");
    }
    if (spec.q[v] - spec.p[v] > spec.k) {
      throw Error(ErrorCode::kInvalidInput,
                  "vertex " + std::to_string(v) + " has |q - p| > k");
    }
  }
  if (spec.z && !g.valid_vertex(*spec.z)) {
    throw Error(ErrorCode::kInvalidInput, "anchor vertex out of range");
  }
  if (spec.x && (*spec.x < 0 || *spec.x >= spec.k)) {
    throw Error(ErrorCode::kInvalidInput, "x must lie in [0, k)");
  }
}

std::optional<VertexIntMap> find_t(const MultiGraph& g, const PQSpec& spec) {
  validate_pq_spec(g, spec);
  const int n = g.vertex_count();
  const std::int64_t need = g.edge_count() - spec.p.sum();
  std::int64_t spread = 0;
  for (VertexId v = 0; v < n; ++v) spread += spec.q[v] - spec.p[v];
  if (need < 0 || need > spread) return std::nullopt;
  // reach[v][s]: increments q - p of vertices v.. can add up to s.
  std::vector<std::vector<char>> reach(n + 1, std::vector<char>(need + 1, 0));
  reach[n][0] = 1;
  for (VertexId v = n - 1; v >= 0; --v) {
    const std::int64_t inc = spec.q[v] - spec.p[v];
    for (std::int64_t s = 0; s <= need; ++s) {
      if (reach[v + 1][s]) {
        reach[v][s] = 1;
        if (s + inc <= need) reach[v][s + inc] = 1;
      }
    }
  }
  if (!reach[0][need]) return std::nullopt;
  VertexIntMap t(n);
  std::int64_t left = need;
  for (VertexId v = 0; v < n; ++v) {
    const std::int64_t inc = spec.q[v] - spec.p[v];
    if (reach[v + 1][left]) {
      t[v] = spec.p[v];
    } else {
      t[v] = spec.q[v];
      left -= inc;
    }
  }
  return t;
}

DefectiveResult defective_pq(const MultiGraph& g, const PQSpec& spec,
                             const PQOptions& options) {
  validate_pq_spec(g, spec);
  if (!spec.z) throw Error(ErrorCode::kInvalidInput, "defective orientation needs z");
  const VertexId z = *spec.z;
  const int k = spec.k;
  const Rational x = spec.x.value_or(Rational(0));
  const int n = g.vertex_count();

  DefectiveResult result;
  const int required = defective_tree_requirement(k);
  const int have = required > 0 ? available_trees(g) : 0;
  result.guaranteed = have >= required;
  if (!result.guaranteed && !options.allow_unguaranteed) {
    throw Error(ErrorCode::kInsufficientConnectivity,
                "defective construction needs " + std::to_string(required) +
                    " edge-disjoint spanning trees, graph has " + std::to_string(have));
  }

  // Tree allocation: T_i first (i = 2..k), then H_i with 3i - 3 trees each.
  const int packed = std::min(required, have);
  TreePacking packing;
  if (packed > 0) {
    packing = pack_spanning_trees(g, packed);
  } else {
    packing.remainder.resize(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) packing.remainder[e] = e;
  }
  std::vector<EdgeSet> t_tree(k + 1);
  std::vector<EdgeSet> h_factor(k + 1);
  std::size_t next = 0;
  for (int i = 2; i <= k && next < packing.trees.size(); ++i) t_tree[i] = packing.trees[next++];
  for (int i = 2; i <= k; ++i) {
    std::vector<EdgeSet> parts;
    for (int c = 0; c < 3 * i - 3 && next < packing.trees.size(); ++c) {
      parts.push_back(packing.trees[next++]);
    }
    h_factor[i] = merge(std::move(parts));
  }

  auto width = [&spec](VertexId v) { return spec.q[v] - spec.p[v]; };
  auto in_v = [&](int i, VertexId v) {
    if (v == z) return false;
    return i == 1 ? width(v) <= 1 : width(v) == i;
  };

  std::vector<EdgeSet> stage_edges(k + 1);
  EdgeSet used;
  for (int i = 2; i <= k; ++i) {
    const auto dh = degrees_within(g, h_factor[i]);
    EdgeSet forest;
    if (!t_tree[i].empty() || n == 1) {
      VertexSet odd;
      for (VertexId v = 0; v < n; ++v) {
        if (v == z) continue;
        const int want = in_v(i, v) ? (g.degree(v) - dh[v]) % 2 : dh[v] % 2;
        if (want != 0) odd.push_back(v);
      }
      if (odd.size() % 2) odd.push_back(z);
      std::sort(odd.begin(), odd.end());
      forest = parity_forest(g, t_tree[i], odd);
    }
    stage_edges[i] = merge({forest, h_factor[i]});
    used.insert(used.end(), stage_edges[i].begin(), stage_edges[i].end());
  }
  std::sort(used.begin(), used.end());
  stage_edges[1] = complement(g, used);

  std::vector<Direction> dirs(g.edge_count(), Direction::kForward);
  Rational x_n = x;
  for (int stage = 1; stage <= k; ++stage) {
    const EdgeSet& edges = stage_edges[stage];
    const MultiGraph sub = edge_subgraph(g, edges);
    DefectiveStage record;
    record.modulus = stage;
    record.edges = edges;
    record.x_in = x_n;
    for (VertexId v = 0; v < n; ++v) {
      if (in_v(stage, v)) record.fixed.push_back(v);
    }

    ModuloSpec mspec;
    mspec.n = stage;
    mspec.residues = VertexIntMap(n);
    std::int64_t others = 0;
    for (VertexId v = 0; v < n; ++v) {
      if (v == z) continue;
      const std::int64_t ds = sub.degree(v);
      std::int64_t low_target;
      if (in_v(stage, v)) {
        // p(v) - d_G(v)/2 + d_{G_n}(v)/2, integral by the parity repair.
        const std::int64_t twice = 2 * spec.p[v] - g.degree(v) + ds;
        if (twice % 2 != 0) {
          throw Error(ErrorCode::kStageFailure,
                      "stage " + std::to_string(stage) + ": parity repair failed at vertex " +
                          std::to_string(v));
        }
        low_target = twice / 2;
      } else {
        if (ds % 2 != 0) {
          throw Error(ErrorCode::kStageFailure,
                      "stage " + std::to_string(stage) + ": odd degree at balanced vertex " +
                          std::to_string(v));
        }
        low_target = ds / 2;
      }
      mspec.residues[v] = mod(low_target, stage);
      others += mspec.residues[v];
    }
    mspec.residues[z] = mod(sub.edge_count() - others, stage);
    // Window [-x', n - x') inside [-x_n, k - x_n).
    Rational anchor_x = x_n - Rational(k - stage);
    if (anchor_x < 0) anchor_x = 0;
    mspec.anchor = ModuloAnchor{z, anchor_x};
    record.anchor_x = anchor_x;

    Orientation part;
    try {
      part = find_modulo_orientation(sub, mspec);
    } catch (const Error& err) {
      throw Error(ErrorCode::kStageFailure,
                  "stage " + std::to_string(stage) + ": " + err.what());
    }

    for (VertexId v = 0; v < n; ++v) {
      if (v == z) continue;
      const Rational dev = Rational(part.out_degree(v)) - half(sub.degree(v));
      const bool ok = in_v(stage, v)
                          ? (dev == Rational(spec.p[v]) - half(g.degree(v)) ||
                             dev == Rational(spec.q[v]) - half(g.degree(v)))
                          : dev == 0;
      if (!ok) {
        throw Error(ErrorCode::kStageFailure, "stage " + std::to_string(stage) +
                                                  " postcondition fails at vertex " +
                                                  std::to_string(v));
      }
    }
    const Rational zdev = Rational(part.out_degree(z)) - half(sub.degree(z));
    if (zdev < -x_n || zdev >= Rational(k) - x_n) {
      throw Error(ErrorCode::kStageFailure,
                  "stage " + std::to_string(stage) + " leaves the anchor window");
    }
    record.z_deviation = zdev;
    x_n += zdev;
    scatter_directions(edges, part, dirs);
    result.stages.push_back(std::move(record));
  }

  result.orientation = Orientation(g, std::move(dirs));
  const Orientation& d = result.orientation;
  for (VertexId v = 0; v < n; ++v) {
    if (v == z) continue;
    if (d.out_degree(v) != spec.p[v] && d.out_degree(v) != spec.q[v]) {
      throw Error(ErrorCode::kInternal, "defective orientation misses {p, q} at vertex " +
                                            std::to_string(v));
    }
  }
  const Rational zdev = Rational(d.out_degree(z)) - half(g.degree(z));
  if (zdev < -x || zdev >= Rational(k) - x) {
    throw Error(ErrorCode::kInternal, "defective orientation misses the anchor window");
  }
  return result;
}

VertexSet minimal_zero_sum_set(const VertexIntMap& s, VertexId z) {
  const int n = s.size();
  if (z < 0 || z >= n) throw Error(ErrorCode::kInvalidInput, "z out of range");
  if (s.sum() != 0) throw Error(ErrorCode::kInvalidInput, "s must sum to zero");
  std::vector<VertexId> others;
  for (VertexId v = 0; v < n; ++v) {
    if (v != z) others.push_back(v);
  }
  const int m = static_cast<int>(others.size());
  for (int extra = 0; extra <= m; ++extra) {
    std::vector<int> pick(extra);
    for (int i = 0; i < extra; ++i) pick[i] = i;
    while (true) {
      std::int64_t sum = s[z];
      for (int i : pick) sum += s[others[i]];
      if (sum == 0) {
        VertexSet out{z};
        for (int i : pick) out.push_back(others[i]);
        std::sort(out.begin(), out.end());
        return out;
      }
      int i = extra - 1;
      while (i >= 0 && pick[i] == m - extra + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < extra; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw Error(ErrorCode::kInternal, "full vertex set must sum to zero");
}

ExactResult exact_pq(const MultiGraph& g, const PQSpec& spec, std::optional<VertexIntMap> t,
                     VertexId z, const PQOptions& options) {
  validate_pq_spec(g, spec);
  if (!g.valid_vertex(z)) throw Error(ErrorCode::kInvalidInput, "z out of range");
  const int k = spec.k;
  const int n = g.vertex_count();
  ExactResult result;
  if (t) {
    require_total(g, *t, "t");
    if (t->sum() != g.edge_count()) {
      throw Error(ErrorCode::kSumMismatch, "sum of t is " + std::to_string(t->sum()) +
                                               " but |E| = " + std::to_string(g.edge_count()));
    }
    for (VertexId v = 0; v < n; ++v) {
      if ((*t)[v] != spec.p[v] && (*t)[v] != spec.q[v]) {
        throw Error(ErrorCode::kInvalidInput, "t(" + std::to_string(v) + ") not in {p, q}");
      }
    }
    result.t = *std::move(t);
  } else {
    auto chosen = find_t(g, spec);
    if (!chosen) {
      throw Error(ErrorCode::kInfeasible, "NONE: no t in {p, q} sums to |E|");
    }
    result.t = *std::move(chosen);
  }

  const int required = exact_tree_requirement(k);
  const int have = available_trees(g);
  result.guaranteed = have >= required;
  if (!result.guaranteed && !options.allow_unguaranteed) {
    throw Error(ErrorCode::kInsufficientConnectivity,
                "exact construction needs " + std::to_string(required) +
                    " edge-disjoint spanning trees, graph has " + std::to_string(have));
  }

  // 2k^2 trees stay in G0; the next k^2 pairs each give a spanning Eulerian
  // subgraph, and their union is H.  Pair leftovers go back to G0.
  const int half_trees = 2 * k * k;
  const int packed = std::min(required, have);
  TreePacking packing;
  if (packed > 0) {
    packing = pack_spanning_trees(g, packed);
  } else {
    for (EdgeId e = 0; e < g.edge_count(); ++e) packing.remainder.push_back(e);
  }
  std::vector<EdgeSet> h_parts;
  for (int i = half_trees; i + 1 < packed; i += 2) {
    EulerianSplit split = spanning_eulerian_from_pair(g, packing.trees[i], packing.trees[i + 1]);
    h_parts.push_back(std::move(split.eulerian));
  }
  result.h_edges = merge(std::move(h_parts));
  result.g0_edges = complement(g, result.h_edges);
  const auto dh = degrees_within(g, result.h_edges);
  for (VertexId v = 0; v < n; ++v) {
    if (dh[v] % 2) throw Error(ErrorCode::kInternal, "Eulerian part has an odd vertex");
  }

  const MultiGraph g0 = edge_subgraph(g, result.g0_edges);
  PQSpec shifted;
  shifted.p = VertexIntMap(n);
  shifted.q = VertexIntMap(n);
  for (VertexId v = 0; v < n; ++v) {
    shifted.p[v] = spec.p[v] - dh[v] / 2;
    shifted.q[v] = spec.q[v] - dh[v] / 2;
  }
  shifted.k = k;
  shifted.z = z;
  // d+_{G0}(z) lands on the same side of d_{G0}(z)/2 as t(z) of d_G(z)/2.
  shifted.x = 2 * result.t[z] >= g.degree(z) ? Rational(0) : Rational(2 * k - 1, 2);
  result.defective = defective_pq(g0, shifted, options);
  const Orientation& d0 = result.defective.orientation;

  result.s = VertexIntMap(n);
  for (VertexId v = 0; v < n; ++v) result.s[v] = result.t[v] - d0.out_degree(v) - dh[v] / 2;
  if (result.s.sum() != 0) throw Error(ErrorCode::kInternal, "discrepancies do not cancel");
  for (VertexId v = 0; v < n; ++v) {
    if (std::llabs(result.s[v]) > k) {
      throw Error(ErrorCode::kInternal, "discrepancy above k at vertex " + std::to_string(v));
    }
  }
  result.zero_sum_set = minimal_zero_sum_set(result.s, z);
  for (VertexId v : result.zero_sum_set) result.zero_sum_mass += std::llabs(result.s[v]);
  result.mass_bound = 2LL * k * (k - 1);
  // For k = 1 the only minimal configuration is s = (+1, -1), mass 2, which H
  // still absorbs since it is 2k^2-edge-connected.
  if (k >= 2 && result.zero_sum_mass > result.mass_bound) {
    throw Error(ErrorCode::kInternal, "zero-sum set exceeds 2k(k-1)");
  }

  const MultiGraph h = edge_subgraph(g, result.h_edges);
  VertexIntMap h_target(n);
  for (VertexId v = 0; v < n; ++v) h_target[v] = dh[v] / 2;
  for (VertexId v : result.zero_sum_set) h_target[v] += result.s[v];
  Orientation dh_orient;
  try {
    dh_orient = orient_lambda(h, h_target);
  } catch (const Error& err) {
    throw Error(ErrorCode::kStageFailure, std::string("Eulerian reorientation: ") + err.what());
  }

  std::vector<Direction> dirs(g.edge_count(), Direction::kForward);
  scatter_directions(result.g0_edges, d0, dirs);
  scatter_directions(result.h_edges, dh_orient, dirs);
  result.orientation = Orientation(g, std::move(dirs));
  for (VertexId v = 0; v < n; ++v) {
    const int out = result.orientation.out_degree(v);
    if (out != spec.p[v] && out != spec.q[v]) {
      throw Error(ErrorCode::kInternal, "exact orientation misses {p, q} at vertex " +
                                            std::to_string(v));
    }
  }
  if (result.orientation.out_degree(z) != result.t[z]) {
    throw Error(ErrorCode::kInternal, "exact orientation misses t(z)");
  }
  return result;
}

}  // namespace orient
