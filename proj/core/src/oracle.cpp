#include "orient/oracle.hpp"

#include <algorithm>
#include <limits>

#include "orient/error.hpp"

namespace orient {

OrientationPredicate& OrientationPredicate::allow(VertexId v, IntList values) {
  if (v < 0) throw Error(ErrorCode::kInvalidInput, "negative vertex in predicate");
  if (allowed.size() <= static_cast<std::size_t>(v)) allowed.resize(v + 1);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  allowed[v] = std::move(values);
  return *this;
}

OrientationPredicate& OrientationPredicate::bound(VertexId v, std::int64_t lo, std::int64_t hi) {
  if (v < 0) throw Error(ErrorCode::kInvalidInput, "negative vertex in predicate");
  if (bounds.size() <= static_cast<std::size_t>(v)) bounds.resize(v + 1);
  bounds[v] = OutDegreeBounds{lo, hi};
  return *this;
}

OrientationPredicate upper_predicate(const VertexIntMap& q) {
  OrientationPredicate pred;
  for (VertexId v = 0; v < q.size(); ++v) pred.bound(v, std::numeric_limits<std::int64_t>::min(), q[v]);
  return pred;
}

OrientationPredicate bounded_predicate(const VertexIntMap& p, const VertexIntMap& q) {
  OrientationPredicate pred;
  for (VertexId v = 0; v < q.size(); ++v) pred.bound(v, p[v], q[v]);
  return pred;
}

OrientationPredicate exact_predicate(const VertexIntMap& t) {
  OrientationPredicate pred;
  for (VertexId v = 0; v < t.size(); ++v) pred.allow(v, {t[v]});
  return pred;
}

OrientationPredicate modulo_predicate(const MultiGraph& g, const ModuloSpec& spec) {
  validate_modulo_spec(g, spec);
  OrientationPredicate pred;
  pred.modulo = ModuloConstraint{spec.n, spec.residues};
  pred.window_radius = Rational(spec.n);
  if (spec.anchor) {
    pred.anchor = AnchorWindow{spec.anchor->z, spec.anchor->x, Rational(spec.n)};
  }
  return pred;
}

OrientationPredicate pq_predicate(const PQSpec& spec, const std::optional<VertexIntMap>& t,
                                  std::optional<VertexId> z) {
  OrientationPredicate pred;
  for (VertexId v = 0; v < spec.p.size(); ++v) pred.allow(v, {spec.p[v], spec.q[v]});
  if (z && t) pred.allow(*z, {(*t)[*z]});
  return pred;
}

OrientationPredicate defective_predicate(const PQSpec& spec) {
  if (!spec.z) throw Error(ErrorCode::kInvalidInput, "defective predicate needs z");
  OrientationPredicate pred = pq_predicate(spec, std::nullopt, std::nullopt);
  pred.exempt = *spec.z;
  pred.anchor = AnchorWindow{*spec.z, spec.x.value_or(Rational(0)), Rational(spec.k)};
  return pred;
}

OrientationPredicate list_predicate(const SparseListProblem& prob) {
  OrientationPredicate pred;
  const int n = prob.g.vertex_count();
  for (VertexId v = 0; v < n; ++v) {
    pred.allow(v, prob.lists[v]);
    pred.bound(v, prob.s[v], prob.g.degree(v) - prob.s0[v]);
  }
  pred.exempt = prob.z;
  return pred;
}

namespace {

void check_vertices(const MultiGraph& g, const OrientationPredicate& pred) {
  const std::size_t n = g.vertex_count();
  if (pred.allowed.size() > n || pred.bounds.size() > n) {
    throw Error(ErrorCode::kInvalidInput, "predicate names a vertex outside the graph");
  }
  if (pred.modulo) {
    if (pred.modulo->n < 1) throw Error(ErrorCode::kInvalidInput, "modulus must be positive");
    if (pred.modulo->residues.size() != g.vertex_count()) {
      throw Error(ErrorCode::kInvalidInput, "modulo residues must cover every vertex");
    }
  }
  if (pred.exempt && !g.valid_vertex(*pred.exempt)) {
    throw Error(ErrorCode::kInvalidInput, "exempt vertex out of range");
  }
  if (pred.anchor && !g.valid_vertex(pred.anchor->z)) {
    throw Error(ErrorCode::kInvalidInput, "anchor vertex out of range");
  }
}

bool admits(const MultiGraph& g, const OrientationPredicate& pred, VertexId v, std::int64_t out,
            std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg + " at vertex " + std::to_string(v);
    return false;
  };
  const std::int64_t d = g.degree(v);
  const bool exempt = pred.exempt && *pred.exempt == v;
  if (!exempt && static_cast<std::size_t>(v) < pred.allowed.size() && pred.allowed[v]) {
    const IntList& list = *pred.allowed[v];
    if (!std::binary_search(list.begin(), list.end(), out)) {
      return fail("out-degree " + std::to_string(out) + " not allowed");
    }
  }
  if (static_cast<std::size_t>(v) < pred.bounds.size() && pred.bounds[v]) {
    if (out < pred.bounds[v]->lo || out > pred.bounds[v]->hi) {
      return fail("out-degree " + std::to_string(out) + " outside [" +
                  std::to_string(pred.bounds[v]->lo) + ", " +
                  std::to_string(pred.bounds[v]->hi) + "]");
    }
  }
  if (!exempt && pred.modulo) {
    const std::int64_t n = pred.modulo->n;
    if (((out - pred.modulo->residues[v]) % n + n) % n != 0) return fail("wrong residue");
  }
  const Rational dev = Rational(out) - half(d);
  if (!exempt && pred.window_radius) {
    if (-*pred.window_radius >= dev || dev >= *pred.window_radius) return fail("outside window");
  }
  if (pred.anchor && pred.anchor->z == v) {
    if (dev < -pred.anchor->x || dev >= pred.anchor->width - pred.anchor->x) {
      return fail("outside anchor window");
    }
  }
  return true;
}

class Search {
 public:
  Search(const MultiGraph& g, const OrientationPredicate& pred, bool prune)
      : g_(g), prune_(prune), out_(g.vertex_count(), 0), left_(g.vertex_count(), 0),
        ok_(g.vertex_count()), prefix_(g.vertex_count()), dirs_(g.edge_count()) {
    check_vertices(g, pred);
    if (g.edge_count() > kOracleEdgeBudget) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "oracle handles at most " + std::to_string(kOracleEdgeBudget) + " edges");
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      const int d = g.degree(v);
      left_[v] = d;
      ok_[v].resize(d + 1);
      prefix_[v].assign(d + 2, 0);
      for (int j = 0; j <= d; ++j) {
        ok_[v][j] = admits(g, pred, v, j, nullptr);
        prefix_[v][j + 1] = prefix_[v][j] + ok_[v][j];
      }
    }
  }

  std::optional<Orientation> first() {
    stop_at_first_ = true;
    if (!viable_all() || !walk(0)) return std::nullopt;
    return Orientation(g_, dirs_);
  }

  std::uint64_t count() {
    stop_at_first_ = false;
    if (prune_ && !viable_all()) return 0;
    walk(0);
    return count_;
  }

 private:
  bool viable(VertexId v) const {
    if (!prune_) return true;
    return prefix_[v][out_[v] + left_[v] + 1] - prefix_[v][out_[v]] > 0;
  }

  bool viable_all() const {
    for (VertexId v = 0; v < g_.vertex_count(); ++v) {
      if (!viable(v)) return false;
    }
    return true;
  }

  bool complete() const {
    for (VertexId v = 0; v < g_.vertex_count(); ++v) {
      if (!ok_[v][out_[v]]) return false;
    }
    return true;
  }

  // Returns true to stop the walk.
  bool walk(EdgeId e) {
    if (e == g_.edge_count()) {
      if (!complete()) return false;
      ++count_;
      return stop_at_first_;
    }
    const Edge& ed = g_.edge(e);
    --left_[ed.u];
    --left_[ed.v];
    for (Direction dir : {Direction::kForward, Direction::kBackward}) {
      const VertexId tail = dir == Direction::kForward ? ed.u : ed.v;
      ++out_[tail];
      dirs_[e] = dir;
      if (viable(ed.u) && viable(ed.v) && walk(e + 1)) {
        --out_[tail];
        ++left_[ed.u];
        ++left_[ed.v];
        return true;
      }
      --out_[tail];
    }
    ++left_[ed.u];
    ++left_[ed.v];
    return false;
  }

  const MultiGraph& g_;
  bool prune_;
  bool stop_at_first_ = true;
  std::uint64_t count_ = 0;
  std::vector<int> out_;
  std::vector<int> left_;
  std::vector<std::vector<char>> ok_;
  std::vector<std::vector<int>> prefix_;
  std::vector<Direction> dirs_;
};

}  // namespace

std::vector<std::string> check_predicate(const MultiGraph& g, const Orientation& d,
                                         const OrientationPredicate& pred) {
  check_vertices(g, pred);
  if (!d.belongs_to(g)) return {"orientation does not match the graph"};
  std::vector<std::string> problems;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::string why;
    if (!admits(g, pred, v, d.out_degree(v), &why)) problems.push_back(why);
  }
  return problems;
}

std::optional<Orientation> enumerate_orientations(const MultiGraph& g,
                                                  const OrientationPredicate& pred) {
  return Search(g, pred, true).first();
}

std::uint64_t count_orientations(const MultiGraph& g, const OrientationPredicate& pred,
                                 const CountOptions& options) {
  return Search(g, pred, options.prune).count();
}

}  // namespace orient
