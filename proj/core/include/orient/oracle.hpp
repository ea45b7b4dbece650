#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orient/graph.hpp"
#include "orient/list_orient.hpp"
#include "orient/modulo_orient.hpp"
#include "orient/pq_orient.hpp"
#include "orient/rational.hpp"

namespace orient {

// Largest edge count the enumerator accepts.
inline constexpr int kOracleEdgeBudget = 24;

struct OutDegreeBounds {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

struct ModuloConstraint {
  int n = 1;
  VertexIntMap residues;
};

// -x <= d+(z) - d(z)/2 < width - x
struct AnchorWindow {
  VertexId z = 0;
  Rational x = 0;
  Rational width = 1;
};

/// Conjunction of out-degree constraints.  Allowed sets, the modulo
/// constraint and the window skip the exempt vertex; bounds and the anchor
/// window apply to every vertex they name.
struct OrientationPredicate {
  std::vector<std::optional<IntList>> allowed;
  std::vector<std::optional<OutDegreeBounds>> bounds;
  std::optional<ModuloConstraint> modulo;
  std::optional<Rational> window_radius;  // |d+(v) - d(v)/2| < radius
  std::optional<AnchorWindow> anchor;
  std::optional<VertexId> exempt;

  OrientationPredicate& allow(VertexId v, IntList values);
  OrientationPredicate& bound(VertexId v, std::int64_t lo, std::int64_t hi);
};

OrientationPredicate upper_predicate(const VertexIntMap& q);
OrientationPredicate bounded_predicate(const VertexIntMap& p, const VertexIntMap& q);
OrientationPredicate exact_predicate(const VertexIntMap& t);
OrientationPredicate modulo_predicate(const MultiGraph& g, const ModuloSpec& spec);
// d+(v) in {p(v), q(v)} everywhere, and d+(z) = t(z) when z is given.
OrientationPredicate pq_predicate(const PQSpec& spec, const std::optional<VertexIntMap>& t,
                                  std::optional<VertexId> z);
// d+(v) in {p(v), q(v)} off z, anchored window at z.
OrientationPredicate defective_predicate(const PQSpec& spec);
OrientationPredicate list_predicate(const SparseListProblem& prob);

/// Every violated constraint, in vertex order.
std::vector<std::string> check_predicate(const MultiGraph& g, const Orientation& d,
                                         const OrientationPredicate& pred);

/// Lexicographically first satisfying orientation (edges in id order, forward
/// before backward), or nullopt.  kBudgetExceeded above kOracleEdgeBudget.
std::optional<Orientation> enumerate_orientations(const MultiGraph& g,
                                                  const OrientationPredicate& pred);

struct CountOptions {
  bool prune = true;
};

std::uint64_t count_orientations(const MultiGraph& g, const OrientationPredicate& pred,
                                 const CountOptions& options = {});

}  // namespace orient
