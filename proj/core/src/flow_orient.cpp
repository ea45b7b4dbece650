#include "orient/flow_orient.hpp"

#include <algorithm>
#include <string>

#include "orient/max_flow.hpp"

namespace orient {

namespace {

struct UpperSolve {
  bool feasible = false;
  std::vector<VertexId> tails;
  VertexSet witness;
};

// Network: source -> edge node (1), edge node -> each end (1),
// vertex -> sink (clamped q).  Node layout: [edges | vertices | s | t].
UpperSolve solve_upper(const MultiGraph& g, const VertexIntMap& q) {
  const int m = g.edge_count();
  const int n = g.vertex_count();
  FlowNetwork net(m + n + 2);
  const int source = m + n;
  const int sink = m + n + 1;
  std::vector<int> to_u(m);
  for (EdgeId e = 0; e < m; ++e) {
    net.add_arc(source, e, 1);
    to_u[e] = net.add_arc(e, m + g.edge(e).u, 1);
    net.add_arc(e, m + g.edge(e).v, 1);
  }
  for (VertexId v = 0; v < n; ++v) {
    net.add_arc(m + v, sink, std::max<std::int64_t>(q[v], 0));
  }
  UpperSolve out;
  const Capacity value = net.max_flow(source, sink);
  if (value == m) {
    for (VertexId v = 0; v < n; ++v) {
      if (q[v] < 0) {
        out.witness = {v};
        return out;
      }
    }
    out.feasible = true;
    out.tails.resize(m);
    for (EdgeId e = 0; e < m; ++e) {
      out.tails[e] = net.flow(to_u[e]) == 1 ? g.edge(e).u : g.edge(e).v;
    }
    return out;
  }
  // Source side of the min cut: its edge nodes have both ends on the source
  // side, so q(S) < |edge nodes in cut side| <= e(S).
  const auto side = net.residual_reachable(source);
  for (VertexId v = 0; v < n; ++v) {
    if (side[m + v]) out.witness.push_back(v);
  }
  return out;
}

VertexIntMap complement_bound(const MultiGraph& g, const VertexIntMap& p) {
  VertexIntMap r(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) r[v] = g.degree(v) - p[v];
  return r;
}

}  // namespace

bool violates_upper(const MultiGraph& g, const VertexIntMap& q, std::span<const VertexId> s) {
  std::int64_t lhs = 0;
  for (VertexId v : s) lhs += g.degree(v) - 2 * q[v];
  return lhs > cut_size(g, s);
}

bool violates_lower(const MultiGraph& g, const VertexIntMap& p, std::span<const VertexId> s) {
  std::int64_t lhs = 0;
  for (VertexId v : s) lhs += 2 * p[v] - g.degree(v);
  return lhs > cut_size(g, s);
}

FeasibilityCertificate check_upper_feasible(const MultiGraph& g, const VertexIntMap& q) {
  require_total(g, q, "q");
  UpperSolve solved = solve_upper(g, q);
  FeasibilityCertificate cert;
  if (solved.feasible) {
    cert.verdict = Verdict::kFeasible;
    cert.orientation = orientation_from_tails(g, solved.tails);
    return cert;
  }
  if (!violates_upper(g, q, solved.witness)) {
    throw Error(ErrorCode::kInternal, "min-cut witness does not violate the upper inequality");
  }
  cert.verdict = Verdict::kInfeasible;
  cert.witness_set = std::move(solved.witness);
  cert.violated = ViolatedBound::kUpper;
  return cert;
}

Orientation orient_upper(const MultiGraph& g, const VertexIntMap& q) {
  FeasibilityCertificate cert = check_upper_feasible(g, q);
  if (!cert.feasible()) {
    throw InfeasibleError(cert.witness_set, cert.violated,
                          "no orientation with d+(v) <= q(v) exists");
  }
  return *std::move(cert.orientation);
}

Orientation orient_exact(const MultiGraph& g, const VertexIntMap& t) {
  require_total(g, t, "t");
  if (t.sum() != g.edge_count()) {
    throw Error(ErrorCode::kSumMismatch,
                "target out-degrees sum to " + std::to_string(t.sum()) + " but |E| = " +
                    std::to_string(g.edge_count()));
  }
  Orientation d = orient_upper(g, t);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (d.out_degree(v) != t[v]) {
      throw Error(ErrorCode::kInternal, "exact orientation missed its target");
    }
  }
  return d;
}

FeasibilityCertificate check_bounded_feasible(const MultiGraph& g, const VertexIntMap& p,
                                              const VertexIntMap& q) {
  require_total(g, p, "p");
  require_total(g, q, "q");
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (p[v] > q[v]) {
      throw Error(ErrorCode::kInvalidInput, "p(" + std::to_string(v) + ") > q(" +
                                                std::to_string(v) + ")");
    }
  }
  FeasibilityCertificate cert;
  cert.verdict = Verdict::kInfeasible;

  // The condition splits into an upper test on q and an upper test on in-degrees
  // d - p; each failing side yields its own witness.
  if (UpperSolve up = solve_upper(g, q); !up.feasible) {
    if (!violates_upper(g, q, up.witness)) {
      throw Error(ErrorCode::kInternal, "upper witness does not violate its inequality");
    }
    cert.witness_set = std::move(up.witness);
    cert.violated = ViolatedBound::kUpper;
    return cert;
  }
  if (UpperSolve low = solve_upper(g, complement_bound(g, p)); !low.feasible) {
    if (!violates_lower(g, p, low.witness)) {
      throw Error(ErrorCode::kInternal, "lower witness does not violate its inequality");
    }
    cert.witness_set = std::move(low.witness);
    cert.violated = ViolatedBound::kLower;
    return cert;
  }

  const int m = g.edge_count();
  const int n = g.vertex_count();
  // Circulation nodes: [edges | vertices | s | t], with t -> s closing the loop.
  BoundedCirculation circ(m + n + 2);
  const int s = m + n;
  const int t = m + n + 1;
  std::vector<int> to_u(m);
  for (EdgeId e = 0; e < m; ++e) {
    circ.add_arc(s, e, 1, 1);
    to_u[e] = circ.add_arc(e, m + g.edge(e).u, 0, 1);
    circ.add_arc(e, m + g.edge(e).v, 0, 1);
  }
  for (VertexId v = 0; v < n; ++v) {
    const std::int64_t lo = std::clamp<std::int64_t>(p[v], 0, g.degree(v));
    const std::int64_t hi = std::clamp<std::int64_t>(q[v], 0, g.degree(v));
    circ.add_arc(m + v, t, lo, hi);
  }
  circ.add_arc(t, s, 0, m);
  const auto flows = circ.solve();
  if (!flows) {
    throw Error(ErrorCode::kInternal,
                "both one-sided conditions hold but the bounded circulation is infeasible");
  }
  std::vector<VertexId> tails(m);
  for (EdgeId e = 0; e < m; ++e) {
    tails[e] = (*flows)[to_u[e]] == 1 ? g.edge(e).u : g.edge(e).v;
  }
  cert.verdict = Verdict::kFeasible;
  cert.orientation = orientation_from_tails(g, tails);
  return cert;
}

Orientation orient_bounded(const MultiGraph& g, const VertexIntMap& p, const VertexIntMap& q) {
  FeasibilityCertificate cert = check_bounded_feasible(g, p, q);
  if (!cert.feasible()) {
    throw InfeasibleError(cert.witness_set, cert.violated,
                          "no orientation with p(v) <= d+(v) <= q(v) exists");
  }
  return *std::move(cert.orientation);
}

std::int64_t lambda_requirement(const MultiGraph& g, const VertexIntMap& q) {
  require_total(g, q, "q");
  std::int64_t lambda = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    lambda += std::max<std::int64_t>(0, g.degree(v) - 2 * q[v]);
  }
  return lambda;
}

Orientation orient_lambda(const MultiGraph& g, const VertexIntMap& q) {
  const std::int64_t lambda = lambda_requirement(g, q);
  if (g.edge_count() > q.sum()) {
    throw Error(ErrorCode::kPrecondition, "|E| = " + std::to_string(g.edge_count()) +
                                              " exceeds sum q = " + std::to_string(q.sum()));
  }
  if (g.vertex_count() >= 2) {
    const int conn = edge_connectivity(g);
    if (conn < lambda) {
      throw Error(ErrorCode::kPrecondition,
                  "graph is " + std::to_string(conn) + "-edge-connected but lambda = " +
                      std::to_string(lambda));
    }
  }
  Orientation d = orient_upper(g, q);
  if (g.edge_count() == q.sum()) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (d.out_degree(v) != q[v]) {
        throw Error(ErrorCode::kInternal, "equality case did not force d+ = q");
      }
    }
  }
  return d;
}

std::vector<Rational> epsilon_targets(const MultiGraph& g, const Orientation& d,
                                      const Rational& eps) {
  if (!d.belongs_to(g)) throw Error(ErrorCode::kInvalidInput, "orientation is for another graph");
  if (eps < 0 || eps > 1) throw Error(ErrorCode::kInvalidInput, "epsilon must lie in [0, 1]");
  std::vector<Rational> f(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    f[v] = (Rational(1) - eps) / 2 * g.degree(v) + eps * d.out_degree(v);
  }
  return f;
}

Orientation reorient_epsilon(const MultiGraph& g, const Orientation& d, const Rational& eps) {
  const auto f = epsilon_targets(g, d, eps);
  VertexIntMap t(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!is_integral(f[v])) {
      throw Error(ErrorCode::kNonIntegral, "target at vertex " + std::to_string(v) + " is " +
                                               to_string(f[v]));
    }
    t[v] = f[v].numerator();
  }
  return orient_exact(g, t);
}

Orientation reorient_scale_odd(const MultiGraph& g, const Orientation& d, int k, int k0) {
  if (k <= 0 || k0 <= 0 || k % 2 == 0 || k0 % 2 == 0 || k0 > k) {
    throw Error(ErrorCode::kInvalidInput, "k and k0 must be odd with 0 < k0 <= k");
  }
  if (!d.belongs_to(g)) throw Error(ErrorCode::kInvalidInput, "orientation is for another graph");
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const int twice_dev = 2 * d.out_degree(v) - g.degree(v);
    if (twice_dev != 0 && twice_dev != k && twice_dev != -k) {
      throw Error(ErrorCode::kPrecondition,
                  "vertex " + std::to_string(v) + " deviates by " +
                      to_string(Rational(twice_dev, 2)) + " from d/2");
    }
  }
  return reorient_epsilon(g, d, Rational(k0, k));
}

}  // namespace orient
