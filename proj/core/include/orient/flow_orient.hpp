#pragma once

#include <optional>

#include "orient/error.hpp"
#include "orient/graph.hpp"
#include "orient/rational.hpp"

namespace orient {

// Lower bounds p, upper bounds q and (optionally) exact targets t.
struct DegreeBoundSpec {
  std::optional<VertexIntMap> p;
  std::optional<VertexIntMap> q;
  std::optional<VertexIntMap> t;
};

enum class Verdict { kFeasible, kInfeasible };

struct FeasibilityCertificate {
  Verdict verdict = Verdict::kInfeasible;
  std::optional<Orientation> orientation;  // set iff feasible
  VertexSet witness_set;                   // set iff infeasible
  ViolatedBound violated = ViolatedBound::kNone;

  bool feasible() const noexcept { return verdict == Verdict::kFeasible; }
};

/// Hakimi: an orientation with d+(v) <= q(v) exists iff e(S) <= q(S) for all S.
/// Decided by max-flow on the edge/vertex bipartite network; an infeasible
/// verdict carries the violating S read off the minimum cut.
FeasibilityCertificate check_upper_feasible(const MultiGraph& g, const VertexIntMap& q);

/// Throws InfeasibleError with the witness set when no orientation exists.
Orientation orient_upper(const MultiGraph& g, const VertexIntMap& q);

// d+(v) = t(v) everywhere.  A wrong total raises kSumMismatch before any
// flow is computed.
Orientation orient_exact(const MultiGraph& g, const VertexIntMap& t);

/// Frank-Gyarfas: p <= d+ <= q.  The witness records which inequality failed:
/// kUpper means sum_S (d - 2q) > d(S), kLower means sum_S (2p - d) > d(S).
FeasibilityCertificate check_bounded_feasible(const MultiGraph& g, const VertexIntMap& p,
                                              const VertexIntMap& q);

Orientation orient_bounded(const MultiGraph& g, const VertexIntMap& p, const VertexIntMap& q);

// lambda = sum_v max(0, d(v) - 2q(v)).
std::int64_t lambda_requirement(const MultiGraph& g, const VertexIntMap& q);

/// Orientation with d+ <= q for a graph that is lambda-edge-connected and has
/// |E| <= sum q.  An unmet precondition raises kPrecondition.
Orientation orient_lambda(const MultiGraph& g, const VertexIntMap& q);

// f(v) = (1 - eps)/2 * d(v) + eps * d+_D(v), exact.
std::vector<Rational> epsilon_targets(const MultiGraph& g, const Orientation& d,
                                      const Rational& eps);

/// Orientation whose out-degrees are the epsilon-interpolation between the
/// balanced value d/2 and D's out-degrees.  Non-integral targets raise
/// kNonIntegral naming the vertex.
Orientation reorient_epsilon(const MultiGraph& g, const Orientation& d, const Rational& eps);

/// For odd k0 <= k: maps deviations {0, +-k/2} to {0, +-k0/2}, preserving sign.
Orientation reorient_scale_odd(const MultiGraph& g, const Orientation& d, int k, int k0);

// Inequality evaluators over a single set S; used for certificate checks.
bool violates_upper(const MultiGraph& g, const VertexIntMap& q, std::span<const VertexId> s);
bool violates_lower(const MultiGraph& g, const VertexIntMap& p, std::span<const VertexId> s);

}  // namespace orient
