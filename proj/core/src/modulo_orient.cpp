#include "orient/modulo_orient.hpp"

#include <string>

#include "orient/error.hpp"
#include "orient/flow_orient.hpp"

namespace orient {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

void validate_modulo_spec(const MultiGraph& g, const ModuloSpec& spec) {
  if (spec.n < 1) throw Error(ErrorCode::kInvalidInput, "modulus must be positive");
  require_total(g, spec.residues, "residues");
  for (std::int64_t r : spec.residues) {
    if (r < 0 || r >= spec.n) {
      throw Error(ErrorCode::kInvalidInput, "residue " + std::to_string(r) +
                                                " outside [0, " + std::to_string(spec.n) + ")");
    }
  }
  if (spec.anchor) {
    if (!g.valid_vertex(spec.anchor->z)) {
      throw Error(ErrorCode::kInvalidInput, "anchor vertex out of range");
    }
    if (spec.anchor->x < 0 || spec.anchor->x >= spec.n) {
      throw Error(ErrorCode::kInvalidInput, "anchor x must lie in [0, n)");
    }
  }
}

bool check_residue_balance(const MultiGraph& g, const ModuloSpec& spec) {
  validate_modulo_spec(g, spec);
  return mod(g.edge_count() - spec.residues.sum(), spec.n) == 0;
}

std::vector<std::int64_t> modulo_candidates(const MultiGraph& g, const ModuloSpec& spec,
                                            VertexId v) {
  const std::int64_t d = g.degree(v);
  const std::int64_t n = spec.n;
  const bool anchored = spec.anchor && spec.anchor->z == v;
  std::vector<std::int64_t> out;
  for (std::int64_t t = 0; t <= d; ++t) {
    if (mod(t - spec.residues[v], n) != 0) continue;
    const Rational dev = Rational(t) - half(d);
    if (!(dev > -n && dev < n)) continue;
    if (anchored && !(dev >= -spec.anchor->x && dev < Rational(n) - spec.anchor->x)) continue;
    out.push_back(t);
  }
  return out;
}

Orientation find_modulo_orientation(const MultiGraph& g, const ModuloSpec& spec,
                                    const ModuloSearchOptions& options) {
  if (!check_residue_balance(g, spec)) {
    throw Error(ErrorCode::kPrecondition, "residues do not balance |E| modulo n");
  }
  const int nv = g.vertex_count();
  const std::int64_t total = g.edge_count();
  std::vector<std::vector<std::int64_t>> options_per_vertex(nv);
  for (VertexId v = 0; v < nv; ++v) options_per_vertex[v] = modulo_candidates(g, spec, v);

  // reach[v] = sums achievable by vertices v..nv-1 (subset-sum table).
  std::vector<std::vector<char>> reach(nv + 1, std::vector<char>(total + 1, 0));
  reach[nv][0] = 1;
  for (VertexId v = nv - 1; v >= 0; --v) {
    for (std::int64_t s = 0; s <= total; ++s) {
      if (!reach[v + 1][s]) continue;
      for (std::int64_t t : options_per_vertex[v]) {
        if (s + t <= total) reach[v][s + t] = 1;
      }
    }
  }
  if (!reach[0][total]) {
    throw Error(ErrorCode::kInfeasible, "NO_CANDIDATE: no window target vector sums to |E|");
  }

  VertexIntMap target(nv);
  int budget = options.candidate_budget;
  std::optional<Orientation> found;
  // Depth-first in lexicographic order; reach[] keeps every branch completable.
  auto dfs = [&](auto&& self, VertexId v, std::int64_t remaining) -> void {
    if (found || budget <= 0) return;
    if (v == nv) {
      --budget;
      if (check_upper_feasible(g, target).feasible()) found = orient_exact(g, target);
      return;
    }
    for (std::int64_t t : options_per_vertex[v]) {
      if (t > remaining || !reach[v + 1][remaining - t]) continue;
      target[v] = t;
      self(self, v + 1, remaining - t);
      if (found || budget <= 0) return;
    }
  };
  dfs(dfs, 0, total);
  if (found) return *std::move(found);
  if (budget <= 0) {
    throw Error(ErrorCode::kBudgetExceeded, "modulo candidate budget exhausted");
  }
  throw Error(ErrorCode::kInfeasible, "UNREALIZABLE: no candidate target vector is orientable");
}

}  // namespace orient
