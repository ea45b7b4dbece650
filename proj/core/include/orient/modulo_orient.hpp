#pragma once

#include <optional>
#include <vector>

#include "orient/graph.hpp"
#include "orient/rational.hpp"

namespace orient {

struct ModuloAnchor {
  VertexId z = 0;
  Rational x = 0;  // in [0, n)
};

struct ModuloSpec {
  int n = 1;
  VertexIntMap residues;  // values in [0, n)
  std::optional<ModuloAnchor> anchor;
};

bool check_residue_balance(const MultiGraph& g, const ModuloSpec& spec);

// Out-degree values allowed at v: inside the open window (d/2 - n, d/2 + n),
// congruent to the residue, and (at the anchor) with deviation in [-x, n - x).
std::vector<std::int64_t> modulo_candidates(const MultiGraph& g, const ModuloSpec& spec,
                                            VertexId v);

struct ModuloSearchOptions {
  int candidate_budget = 1 << 16;
};

/// Orientation with d+(v) = residue(v) (mod n) and |d+(v) - d(v)/2| < n,
/// honouring the anchor window.  Target vectors are enumerated lexicographically
/// among those summing to |E| and each is realized by flow.  Raises
/// kPrecondition on imbalance, kInfeasible with message NO_CANDIDATE when no
/// target vector sums to |E|, and UNREALIZABLE when none is realizable.
Orientation find_modulo_orientation(const MultiGraph& g, const ModuloSpec& spec,
                                    const ModuloSearchOptions& options = {});

void validate_modulo_spec(const MultiGraph& g, const ModuloSpec& spec);

}  // namespace orient
