#pragma once

#include <optional>
#include <vector>

#include "orient/graph.hpp"
#include "orient/modulo_orient.hpp"
#include "orient/rational.hpp"

namespace orient {

struct PQSpec {
  VertexIntMap p;
  VertexIntMap q;
  int k = 1;
  std::optional<VertexId> z;
  std::optional<Rational> x;
};

/// p(v) <= d(v)/2 <= q(v) and |q(v) - p(v)| <= k at every vertex; anchor
/// vertex and x in [0, k) when present.
void validate_pq_spec(const MultiGraph& g, const PQSpec& spec);

/// Lexicographically least t with t(v) in {p(v), q(v)} and sum t = |E|, or
/// nullopt when no such t exists.
std::optional<VertexIntMap> find_t(const MultiGraph& g, const PQSpec& spec);

struct PQOptions {
  // Below the connectivity threshold, attempt the construction anyway and
  // flag the result as unguaranteed instead of failing up front.
  bool allow_unguaranteed = false;
};

// (3k/2 + 1)(k - 1): trees needed by the defective construction.
int defective_tree_requirement(int k);
// 4k^2: trees needed by the exact construction.
int exact_tree_requirement(int k);

struct DefectiveStage {
  int modulus = 1;          // stage index n, also the modulus
  EdgeSet edges;            // E(G_n)
  VertexSet fixed;          // V_n: vertices whose bounds differ by n
  Rational x_in = 0;        // x_n before the stage
  Rational anchor_x = 0;    // anchor passed to the modulo search
  Rational z_deviation = 0; // d+_{G_n}(z) - d_{G_n}(z)/2
};

struct DefectiveResult {
  Orientation orientation;
  bool guaranteed = true;
  std::vector<DefectiveStage> stages;  // in execution order n = 1..k
};

/// Orientation with d+(v) in {p(v), q(v)} for v != z and
/// -x <= d+(z) - d(z)/2 < k - x.  Splits G into spanning trees T_i and
/// (3i-3)-tree-connected factors H_i, repairs parities with forests F_i of
/// T_i, and solves one modulo-i problem per factor with the anchor carried
/// from stage to stage.
DefectiveResult defective_pq(const MultiGraph& g, const PQSpec& spec,
                             const PQOptions& options = {});

/// Smallest set containing z whose s-values sum to zero (ties broken
/// lexicographically).  kInvalidInput if sum s != 0.
VertexSet minimal_zero_sum_set(const VertexIntMap& s, VertexId z);

struct ExactResult {
  Orientation orientation;
  bool guaranteed = true;
  VertexIntMap t;
  EdgeSet g0_edges;          // 2k^2-tree-connected part
  EdgeSet h_edges;           // Eulerian part
  VertexIntMap s;            // t - d+_{G0} - d_H/2
  VertexSet zero_sum_set;    // minimal S containing z
  std::int64_t zero_sum_mass = 0;   // sum over S of |s|
  std::int64_t mass_bound = 0;     // 2k(k-1)
  DefectiveResult defective;
};

/// Orientation with d+(v) in {p(v), q(v)} everywhere and d+(z) = t(z).  When
/// t is not supplied it is chosen by find_t (kInfeasible "NONE" if absent).
ExactResult exact_pq(const MultiGraph& g, const PQSpec& spec,
                     std::optional<VertexIntMap> t, VertexId z,
                     const PQOptions& options = {});

}  // namespace orient
