#include "orient/list_orient.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "orient/error.hpp"
#include "orient/pq_orient.hpp"
#include "orient/rational.hpp"
#include "orient/tree_packing.hpp"

namespace orient {

std::int64_t gap_of(const IntList& list) {
  if (list.empty()) throw Error(ErrorCode::kInvalidInput, "gap of an empty list");
  std::int64_t gap = 0;
  for (std::size_t i = 1; i < list.size(); ++i) gap = std::max(gap, list[i] - list[i - 1]);
  return gap;
}

ListAssignment::ListAssignment(std::vector<IntList> l) : lists(std::move(l)) {
  for (auto& list : lists) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
}

std::int64_t ListAssignment::gap() const {
  std::int64_t gap = 0;
  for (const auto& list : lists) {
    if (!list.empty()) gap = std::max(gap, gap_of(list));
  }
  return gap;
}

std::string_view to_string(ListStep step) {
  switch (step) {
    case ListStep::kBase: return "base";
    case ListStep::kCase1: return "lift";
    case ListStep::kCase2: return "peel";
    case ListStep::kTerminal: return "terminal";
  }
  return "?";
}

namespace {

IntList pruned(const IntList& list, std::int64_t shift, std::int64_t hi) {
  IntList out;
  for (std::int64_t c : list) {
    const std::int64_t v = c - shift;
    if (v >= 0 && v <= hi) out.push_back(v);
  }
  return out;
}

std::int64_t safe_gap(const IntList& list) { return list.empty() ? 0 : gap_of(list); }

bool contains(const IntList& list, std::int64_t value) {
  return std::binary_search(list.begin(), list.end(), value);
}

void check_sizes(const SparseListProblem& prob) {
  const int n = prob.g.vertex_count();
  if (prob.lists.size() != n || prob.s.size() != n || prob.s0.size() != n ||
      prob.l0.size() != n) {
    throw Error(ErrorCode::kInvalidInput, "lists and floors must cover every vertex");
  }
  if (!prob.g.valid_vertex(prob.z)) throw Error(ErrorCode::kInvalidInput, "z out of range");
}

struct Frame {
  MultiGraph g;
  VertexId z = 0;
  std::vector<IntList> lists;
  std::vector<std::int64_t> s, s0, l0;
};

struct BudgetExhausted {};

class Solver {
 public:
  Solver(int m, int k, std::int64_t budget) : m_(m), k_(k), budget_(budget) {}

  std::optional<std::vector<VertexId>> solve(const Frame& f, int depth) {
    spend();
    const int n = f.g.vertex_count();
    if (n <= 2) return base(f, depth);
    if (auto t = peel(f, depth)) return t;
    if (auto t = lift_case(f, depth)) return t;
    return terminal(f, depth);
  }

  std::vector<ListTraceEntry> trace;
  std::int64_t work = 0;
  std::int64_t rejected = 0;

 private:
  void spend() {
    if (++work > budget_) throw BudgetExhausted{};
  }

  bool connected_enough(const MultiGraph& g, const std::vector<std::int64_t>& l0) {
    spend();
    return is_partition_connected(g, PartitionSpec{m_, VertexIntMap(l0)}).has_value();
  }

  bool valid(const Frame& f, const std::vector<VertexId>& tails) const {
    std::vector<std::int64_t> out(f.g.vertex_count(), 0);
    for (VertexId t : tails) ++out[t];
    for (VertexId v = 0; v < f.g.vertex_count(); ++v) {
      if (v != f.z && !contains(f.lists[v], out[v])) return false;
      if (out[v] < f.s[v] || out[v] > f.g.degree(v) - f.s0[v]) return false;
    }
    return true;
  }

  std::optional<std::vector<VertexId>> accept(const Frame& f, std::vector<VertexId> tails,
                                              int depth, ListStep step, VertexId at,
                                              std::size_t mark) {
    if (!valid(f, tails)) {
      trace.resize(mark);
      ++rejected;
      return std::nullopt;
    }
    trace.push_back({depth, f.g.vertex_count(), step, at});
    return tails;
  }

  std::optional<std::vector<VertexId>> base(const Frame& f, int depth) {
    const int e = f.g.edge_count();
    if (f.g.vertex_count() == 1) return accept(f, {}, depth, ListStep::kBase, -1, trace.size());
    for (int j = 0; j <= e; ++j) {
      std::vector<VertexId> tails(e, 1);
      for (int i = 0; i < j; ++i) tails[i] = 0;
      if (valid(f, tails)) {
        return accept(f, std::move(tails), depth, ListStep::kBase, -1, trace.size());
      }
    }
    ++rejected;
    return std::nullopt;
  }

  // d(z) < 2 l0(z) + gap(L(z)) - 1: drop one edge zu and recurse.
  std::optional<std::vector<VertexId>> peel(const Frame& f, int depth) {
    const VertexId z = f.z;
    const std::int64_t gz = safe_gap(f.lists[z]);
    if (!(f.g.degree(z) < 2 * f.l0[z] + gz - 1) || f.l0[z] <= 0) return std::nullopt;
    std::vector<char> seen(f.g.vertex_count(), 0);
    for (EdgeId e : f.g.incident(z)) {
      const VertexId u = f.g.other_end(e, z);
      if (seen[u]) continue;
      seen[u] = 1;
      std::vector<EdgeId> keep;
      for (EdgeId x = 0; x < f.g.edge_count(); ++x) {
        if (x != e) keep.push_back(x);
      }
      Frame sub;
      sub.g = edge_subgraph(f.g, keep);
      sub.z = z;
      sub.l0 = f.l0;
      --sub.l0[z];
      if (!connected_enough(sub.g, sub.l0)) continue;
      sub.lists = f.lists;
      sub.s = f.s;
      sub.s0 = f.s0;
      const bool into_z = f.s[z] < f.l0[z];
      // into_z: u -> z, so u keeps one out-edge and z one in-edge.
      const VertexId tail = into_z ? u : z;
      const VertexId head = into_z ? z : u;
      sub.lists[tail] = pruned(f.lists[tail], 1, sub.g.degree(tail));
      sub.lists[head] = pruned(f.lists[head], 0, sub.g.degree(head));
      --sub.s[tail];
      --sub.s0[head];
      if (tail != z && sub.lists[tail].empty()) {
        ++rejected;
        continue;
      }
      const std::size_t mark = trace.size();
      auto inner = solve(sub, depth + 1);
      if (!inner) continue;
      std::vector<VertexId> tails(f.g.edge_count());
      for (std::size_t i = 0; i < keep.size(); ++i) tails[keep[i]] = (*inner)[i];
      tails[e] = tail;
      if (auto t = accept(f, std::move(tails), depth, ListStep::kCase2, u, mark)) return t;
    }
    return std::nullopt;
  }

  // A vertex u != z of degree 2 l0(u) + 2m - r: lift l0(u) + m - r pairs at
  // u, orient the r remaining edges at u, and recurse on V \ {u}.
  std::optional<std::vector<VertexId>> lift_case(const Frame& f, int depth) {
    const int n = f.g.vertex_count();
    for (VertexId u = 0; u < n; ++u) {
      if (u == f.z) continue;
      const std::int64_t lm = f.l0[u] + m_;
      const std::int64_t r = 2 * lm - f.g.degree(u);
      if (r <= 0 || r > lm) continue;
      const std::int64_t gu = safe_gap(f.lists[u]);
      bool listed = false;
      for (std::int64_t i = 0; i <= std::min(r, gu - 1); ++i) listed |= contains(f.lists[u], lm - i);
      if (!listed) continue;
      const int pairs = static_cast<int>(lm - r);
      std::optional<std::vector<VertexId>> found;
      for_each_lift_choice(
          f.g, u, pairs, [&](std::span<const std::pair<VertexId, VertexId>> choice) {
            spend();
            found = try_lift(f, u, choice, depth);
            return found.has_value();
          });
      if (found) return found;
    }
    return std::nullopt;
  }

  std::optional<std::vector<VertexId>> try_lift(
      const Frame& f, VertexId u, std::span<const std::pair<VertexId, VertexId>> choice,
      int depth) {
    const int n = f.g.vertex_count();
    LiftResult lr = apply_lifts(f.g, u, choice);
    std::vector<std::int64_t> l0h(n - 1);
    for (VertexId v = 0; v < n; ++v) {
      if (v != u) l0h[lr.vertex_map[v]] = f.l0[v];
    }
    if (!connected_enough(lr.graph, l0h)) return std::nullopt;

    const int pairs = static_cast<int>(choice.size());
    std::vector<VertexId> nbrs;
    std::vector<int> mult(n, 0);
    for (EdgeId e : lr.unlifted) {
      const VertexId w = f.g.other_end(e, u);
      if (mult[w]++ == 0) nbrs.push_back(w);
    }
    std::sort(nbrs.begin(), nbrs.end());
    const int r = static_cast<int>(lr.unlifted.size());
    std::vector<int> out_of_u(n, 0);  // R-edges u -> w per neighbour

    std::function<std::optional<std::vector<VertexId>>(std::size_t, int)> distribute =
        [&](std::size_t idx, int left) -> std::optional<std::vector<VertexId>> {
      if (idx == nbrs.size()) {
        if (left != 0) return std::nullopt;
        return descend(f, u, lr, out_of_u, depth);
      }
      const VertexId w = nbrs[idx];
      for (int c = 0; c <= std::min(left, mult[w]); ++c) {
        out_of_u[w] = c;
        if (auto t = distribute(idx + 1, left - c)) return t;
      }
      out_of_u[w] = 0;
      return std::nullopt;
    };
    for (int j = 0; j <= r; ++j) {
      if (!contains(f.lists[u], j + pairs)) continue;
      if (auto t = distribute(0, j)) return t;
    }
    return std::nullopt;
  }

  std::optional<std::vector<VertexId>> descend(const Frame& f, VertexId u, const LiftResult& lr,
                                               const std::vector<int>& out_of_u, int depth) {
    spend();
    const int n = f.g.vertex_count();
    std::vector<int> into_u(n, 0);
    for (EdgeId e : lr.unlifted) ++into_u[f.g.other_end(e, u)];
    for (VertexId w = 0; w < n; ++w) into_u[w] -= out_of_u[w];

    Frame sub;
    sub.g = lr.graph;
    sub.z = lr.vertex_map[f.z];
    sub.lists.resize(n - 1);
    sub.s.resize(n - 1);
    sub.s0.resize(n - 1);
    sub.l0.resize(n - 1);
    for (VertexId v = 0; v < n; ++v) {
      if (v == u) continue;
      const VertexId h = lr.vertex_map[v];
      const int dh = sub.g.degree(h);
      sub.lists[h] = pruned(f.lists[v], into_u[v], dh);
      sub.s[h] = f.s[v] - into_u[v];
      sub.s0[h] = f.s0[v] - out_of_u[v];
      sub.l0[h] = f.l0[v];
      if (v != f.z && sub.lists[h].empty()) {
        ++rejected;
        return std::nullopt;
      }
      // Displayed inequality of the induction step (non-strict form).
      if (sub.s[h] + sub.s0[h] + safe_gap(f.lists[v]) - 1 > dh) {
        ++rejected;
        return std::nullopt;
      }
    }
    const std::size_t mark = trace.size();
    auto inner = solve(sub, depth + 1);
    if (!inner) return std::nullopt;

    std::vector<VertexId> to_old(n - 1);
    for (VertexId v = 0; v < n; ++v) {
      if (v != u) to_old[lr.vertex_map[v]] = v;
    }
    std::vector<VertexId> tails(f.g.edge_count(), -1);
    for (std::size_t i = 0; i < lr.origin.size(); ++i) {
      const auto [e1, e2] = lr.origin[i];
      const VertexId t = to_old[(*inner)[i]];
      if (e2 < 0) {
        tails[e1] = t;
      } else if (t == f.g.other_end(e1, u)) {
        tails[e1] = t;  // x -> u -> y
        tails[e2] = u;
      } else {
        tails[e2] = t;  // y -> u -> x
        tails[e1] = u;
      }
    }
    std::vector<int> budget_out = out_of_u;
    for (EdgeId e : lr.unlifted) {
      const VertexId w = f.g.other_end(e, u);
      if (budget_out[w] > 0) {
        --budget_out[w];
        tails[e] = u;
      } else {
        tails[e] = w;
      }
    }
    return accept(f, std::move(tails), depth, ListStep::kCase1, u, mark);
  }

  // Defective {p, q}-orientation with p, q the list members around d/2.
  std::optional<std::vector<VertexId>> terminal(const Frame& f, int depth) {
    const int n = f.g.vertex_count();
    const int kd = std::max(1, k_);
    PQSpec spec;
    spec.p = VertexIntMap(n);
    spec.q = VertexIntMap(n);
    spec.k = kd;
    spec.z = f.z;
    spec.x = Rational(kd, 2);
    for (VertexId v = 0; v < n; ++v) {
      const std::int64_t d = f.g.degree(v);
      if (v == f.z) {
        spec.p[v] = d / 2;
        spec.q[v] = (d + 1) / 2;
        continue;
      }
      const IntList& list = f.lists[v];
      auto above = std::lower_bound(list.begin(), list.end(), (d + 1) / 2);
      auto below = std::upper_bound(list.begin(), list.end(), d / 2);
      if (above == list.end() || below == list.begin()) {
        ++rejected;
        return std::nullopt;
      }
      spec.p[v] = *std::prev(below);
      spec.q[v] = *above;
      if (spec.q[v] - spec.p[v] > kd) {
        ++rejected;
        return std::nullopt;
      }
    }
    DefectiveResult res;
    try {
      spend();
      res = defective_pq(f.g, spec, PQOptions{true});
    } catch (const Error&) {
      ++rejected;
      return std::nullopt;
    }
    std::vector<VertexId> tails(f.g.edge_count());
    for (EdgeId e = 0; e < f.g.edge_count(); ++e) tails[e] = res.orientation.tail(f.g, e);
    return accept(f, std::move(tails), depth, ListStep::kTerminal, -1, trace.size());
  }

  int m_;
  int k_;
  std::int64_t budget_;
};

}  // namespace

SparseListProblem normalize(const SparseListProblem& prob) {
  check_sizes(prob);
  SparseListProblem out = prob;
  for (VertexId v = 0; v < prob.g.vertex_count(); ++v) {
    IntList list = prob.lists[v];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    out.lists.lists[v] = pruned(list, 0, prob.g.degree(v));
    out.l0[v] = std::max<std::int64_t>(0, prob.l0[v]);
  }
  return out;
}

std::vector<std::string> check_list_preconditions(const SparseListProblem& raw) {
  const SparseListProblem prob = normalize(raw);
  std::vector<std::string> problems;
  const int n = prob.g.vertex_count();
  for (VertexId v = 0; v < n; ++v) {
    if (prob.lists[v].empty()) problems.push_back("L(" + std::to_string(v) + ") has no member in [0, d]");
  }
  if (!problems.empty()) return problems;
  const std::int64_t k = prob.lists.gap();
  const std::int64_t m = 2 * k * k;
  if (prob.lists.gap(prob.z) != k) problems.push_back("gap(L(z)) differs from gap(L)");
  for (VertexId v = 0; v < n; ++v) {
    const std::int64_t gv = prob.lists.gap(v);
    const std::string at = " at vertex " + std::to_string(v);
    if (prob.s[v] + prob.s0[v] + gv >= prob.g.degree(v)) {
      problems.push_back("s + s0 + gap(L(v)) < d fails" + at);
    }
    const std::int64_t cap = prob.l0[v] + (v == prob.z ? 0 : m - gv + 1);
    if (std::max(prob.s[v], prob.s0[v]) > cap) problems.push_back("max{s, s0} above its cap" + at);
  }
  if (problems.empty() && !prob.trusted &&
      !is_partition_connected(prob.g, PartitionSpec{static_cast<int>(m), prob.l0})) {
    problems.push_back("graph is not (" + std::to_string(m) + ", l0)-partition-connected");
  }
  return problems;
}

std::vector<std::string> check_list_orientation(const SparseListProblem& prob,
                                                const Orientation& d) {
  check_sizes(prob);
  std::vector<std::string> problems;
  if (!d.belongs_to(prob.g)) return {"orientation does not match the graph"};
  const ListAssignment sorted(prob.lists.lists);
  for (VertexId v = 0; v < prob.g.vertex_count(); ++v) {
    const std::int64_t out = d.out_degree(v);
    const std::string at = " at vertex " + std::to_string(v);
    if (v != prob.z && !contains(sorted[v], out)) {
      problems.push_back("out-degree " + std::to_string(out) + " not in L" + at);
    }
    if (out < prob.s[v]) problems.push_back("out-degree below s" + at);
    if (out > prob.g.degree(v) - prob.s0[v]) problems.push_back("out-degree above d - s0" + at);
  }
  return problems;
}

ListResult sparse_list_orientation(const SparseListProblem& raw, const ListSolveOptions& options) {
  const auto problems = check_list_preconditions(raw);
  if (!problems.empty()) {
    std::string msg = "sparse-list hypotheses fail:";
    for (const auto& p : problems) msg += " " + p + ";";
    throw Error(ErrorCode::kPrecondition, msg);
  }
  const SparseListProblem prob = normalize(raw);
  const int k = static_cast<int>(prob.lists.gap());
  Solver solver(2 * k * k, k, options.budget);
  Frame top;
  top.g = prob.g;
  top.z = prob.z;
  top.lists = prob.lists.lists;
  auto copy = [](const VertexIntMap& m) {
    return std::vector<std::int64_t>(m.values().begin(), m.values().end());
  };
  top.s = copy(prob.s);
  top.s0 = copy(prob.s0);
  top.l0 = copy(prob.l0);
  std::optional<std::vector<VertexId>> tails;
  try {
    tails = solver.solve(top, 0);
  } catch (const BudgetExhausted&) {
    throw Error(ErrorCode::kIndeterminate,
                "sparse-list search stopped after " + std::to_string(options.budget) + " steps");
  }
  if (!tails) {
    throw Error(ErrorCode::kSearchExhausted,
                "every branch failed (" + std::to_string(solver.rejected) + " rejected)");
  }
  ListResult result;
  result.orientation = orientation_from_tails(prob.g, *tails);
  result.trace.assign(solver.trace.rbegin(), solver.trace.rend());
  result.work = solver.work;
  result.rejected_branches = solver.rejected;
  if (!check_list_orientation(prob, result.orientation).empty()) {
    throw Error(ErrorCode::kInternal, "sparse-list solver produced an invalid orientation");
  }
  return result;
}

}  // namespace orient
