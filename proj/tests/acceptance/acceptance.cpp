// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "brute.hpp"
#include "list_instances.hpp"
#include "orient/error.hpp"
#include "orient/flow_orient.hpp"
#include "orient/generators.hpp"
#include "orient/graph.hpp"
#include "orient/list_orient.hpp"
#include "orient/modulo_orient.hpp"
#include "orient/oracle.hpp"
#include "orient/pq_orient.hpp"
#include "orient/sequences.hpp"
#include "orient/tree_packing.hpp"

using namespace orient;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) {
      ++failures_;
      if (first_.empty()) first_ = what;
    }
  }
  int failures() const { return failures_; }
  int checks() const { return checks_; }
  std::string summary() const {
    std::ostringstream s;
    s << checks_ << " checks, " << failures_ << " failures";
    if (!first_.empty()) s << " (first: " << first_ << ")";
    return s.str();
  }

 private:
  int checks_ = 0;
  int failures_ = 0;
  std::string first_;
};

bool in_bounds(const Orientation& d, const VertexIntMap& lo, const VertexIntMap& hi) {
  for (VertexId v = 0; v < d.vertex_count(); ++v) {
    if (d.out_degree(v) < lo[v] || d.out_degree(v) > hi[v]) return false;
  }
  return true;
}

Orientation random_orientation(gen::Rng& rng, const MultiGraph& g) {
  std::vector<Direction> dirs(g.edge_count());
  for (auto& dir : dirs) dir = rng() % 2 ? Direction::kForward : Direction::kBackward;
  return Orientation(g, std::move(dirs));
}

bool connected_spanning(const MultiGraph& g, const EdgeSet& edges) {
  std::vector<int> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  int components = g.vertex_count();
  for (EdgeId e : edges) {
    const int a = find(g.edge(e).u);
    const int b = find(g.edge(e).v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

EdgeSet random_spanning_tree(gen::Rng& rng, const MultiGraph& g) {
  std::vector<EdgeId> order(g.edge_count());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<int> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  EdgeSet tree;
  for (EdgeId e : order) {
    const int a = find(g.edge(e).u);
    const int b = find(g.edge(e).v);
    if (a != b) {
      parent[a] = b;
      tree.push_back(e);
    }
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

// Connected multigraphs on n vertices with at most max_edges edges, one per
// isomorphism class.
std::vector<MultiGraph> connected_multigraphs(int n, int max_edges) {
  std::vector<Edge> pairs;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) pairs.push_back({u, v});
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  std::set<std::vector<std::pair<int, int>>> seen;
  std::vector<MultiGraph> out;
  std::vector<int> chosen;
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    std::vector<Edge> edges;
    for (int i : chosen) edges.push_back(pairs[i]);
    if (static_cast<int>(edges.size()) >= n - 1) {
      MultiGraph g(n, edges);
      EdgeSet all(g.edge_count());
      std::iota(all.begin(), all.end(), 0);
      if (n == 1 || connected_spanning(g, all)) {
        std::vector<std::pair<int, int>> best;
        for (const auto& p : perms) {
          std::vector<std::pair<int, int>> image;
          for (const Edge& e : edges) {
            const int a = p[e.u];
            const int b = p[e.v];
            image.emplace_back(std::min(a, b), std::max(a, b));
          }
          std::sort(image.begin(), image.end());
          if (best.empty() || image < best) best = image;
        }
        if (seen.insert(best).second) out.push_back(g);
      }
    }
    if (static_cast<int>(chosen.size()) == max_edges) return;
    for (std::size_t i = from; i < pairs.size(); ++i) {
      chosen.push_back(static_cast<int>(i));
      grow(i);
      chosen.pop_back();
    }
  };
  grow(0);
  return out;
}

Outcome criterion1() {
  Tally tally;
  gen::Rng rng(101);
  int graphs = 0;
  for (int n = 1; n <= 5; ++n) {
    for (const MultiGraph& g : connected_multigraphs(n, 8)) {
      ++graphs;
      VertexIntMap q(n);
      std::function<void(VertexId)> sweep = [&](VertexId v) {
        if (v == n) {
          const bool flow = check_upper_feasible(g, q).feasible();
          const bool oracle = enumerate_orientations(g, upper_predicate(q)).has_value();
          tally.check(flow == oracle, "upper verdict");
          return;
        }
        for (std::int64_t c = 0; c <= g.degree(v); ++c) {
          q[v] = c;
          sweep(v + 1);
        }
      };
      sweep(0);
      for (int round = 0; round < 500; ++round) {
        VertexIntMap p(n), hi(n);
        for (VertexId v = 0; v < n; ++v) {
          const std::int64_t d = g.degree(v);
          p[v] = static_cast<std::int64_t>(rng() % (d + 1));
          hi[v] = p[v] + static_cast<std::int64_t>(rng() % (d + 1 - p[v]));
        }
        const bool oracle = enumerate_orientations(g, bounded_predicate(p, hi)).has_value();
        bool flow = false;
        try {
          flow = in_bounds(orient_bounded(g, p, hi), p, hi);
          tally.check(flow, "orient_bounded output outside bounds");
        } catch (const InfeasibleError&) {
        }
        tally.check(flow == oracle, "bounded verdict");
      }
    }
  }
  return {tally.failures() == 0,
          std::to_string(graphs) + " graphs, " + tally.summary()};
}

void partitions(std::int64_t total, std::int64_t max_part, std::vector<std::int64_t>& cur,
                const std::function<void(const std::vector<std::int64_t>&)>& fn) {
  if (total == 0) {
    fn(cur);
    return;
  }
  for (std::int64_t part = std::min(total, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions(total - part, part, cur, fn);
    cur.pop_back();
  }
}

Outcome criterion2() {
  int irreducible = 0;
  std::vector<std::string> counterexamples;
  for (std::int64_t total = 1; total <= 16; ++total) {
    std::vector<std::vector<std::int64_t>> parts;
    std::vector<std::int64_t> cur;
    partitions(total, 4, cur, [&](const std::vector<std::int64_t>& p) { parts.push_back(p); });
    for (const auto& xs : parts) {
      for (const auto& ys : parts) {
        const SequencePair sp{xs, ys};
        if (!is_irreducible(sp)) continue;
        ++irreducible;
        if (!additive_bound_holds(sp)) {
          std::ostringstream s;
          s << "(";
          for (std::size_t i = 0; i < xs.size(); ++i) s << (i ? "," : "") << xs[i];
          s << ")/(";
          for (std::size_t i = 0; i < ys.size(); ++i) s << (i ? "," : "") << ys[i];
          s << ") sum " << total << " > " << sp.k() * (sp.k() - 1);
          counterexamples.push_back(s.str());
        }
      }
    }
  }
  bool sharp = true;
  for (std::int64_t k = 2; k <= 6; ++k) {
    const SequencePair sp{std::vector<std::int64_t>(k - 1, k),
                          std::vector<std::int64_t>(k, k - 1)};
    sharp = sharp && is_irreducible(sp) && k * (k - 1) == (k - 1) * k &&
            std::accumulate(sp.xs.begin(), sp.xs.end(), std::int64_t{0}) == k * (k - 1);
  }
  std::ostringstream s;
  s << irreducible << " irreducible pairs, " << counterexamples.size() << " counterexamples";
  for (const auto& c : counterexamples) s << " " << c;
  s << "; sharpness k=2..6 " << (sharp ? "holds" : "broken");
  return {counterexamples.empty() && sharp, s.str()};
}

Outcome criterion3() {
  Tally tally;
  gen::Rng rng(303);
  for (int round = 0; round < 1000; ++round) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const MultiGraph g = gen::random_connected(rng, n, n - 1 + static_cast<int>(rng() % 12));
    const EdgeSet tree = random_spanning_tree(rng, g);
    VertexSet q;
    for (VertexId v = 0; v < n; ++v) {
      if (rng() % 2) q.push_back(v);
    }
    if (q.size() % 2) q.erase(q.begin() + static_cast<long>(rng() % q.size()));
    const EdgeSet forest = parity_forest(g, tree, q);
    bool subset = std::all_of(forest.begin(), forest.end(), [&](EdgeId e) {
      return std::binary_search(tree.begin(), tree.end(), e);
    });
    VertexSet odd = odd_vertices(g, forest);
    std::sort(odd.begin(), odd.end());
    tally.check(subset && odd == q, "odd set");
  }
  return {tally.failures() == 0, tally.summary()};
}

Outcome criterion4() {
  Tally tally;
  gen::Rng rng(404);
  int oracle_checked = 0;
  for (int n : {2, 3}) {
    for (int round = 0; round < 200; ++round) {
      const int verts = 3 + static_cast<int>(rng() % 3);
      const MultiGraph g = gen::random_edge_connected(rng, verts, 3 * n - 3);
      tally.check(edge_connectivity(g) >= 3 * n - 3, "generator connectivity");
      std::vector<VertexIntMap> maps;
      std::int64_t free_maps = 1;
      for (int i = 1; i < verts; ++i) free_maps *= n;
      auto complete = [&](VertexIntMap r) {
        std::int64_t sum = 0;
        for (VertexId v = 1; v < verts; ++v) sum += r[v];
        r[0] = ((g.edge_count() - sum) % n + n) % n;
        return r;
      };
      if (free_maps <= 50) {
        for (std::int64_t code = 0; code < free_maps; ++code) {
          VertexIntMap r(verts);
          std::int64_t c = code;
          for (VertexId v = 1; v < verts; ++v, c /= n) r[v] = c % n;
          maps.push_back(complete(r));
        }
      } else {
        for (int i = 0; i < 50; ++i) {
          VertexIntMap r(verts);
          for (VertexId v = 1; v < verts; ++v) r[v] = static_cast<std::int64_t>(rng() % n);
          maps.push_back(complete(r));
        }
      }
      for (const VertexIntMap& r : maps) {
        ModuloSpec spec{n, r, std::nullopt};
        if (rng() % 2) {
          spec.anchor = ModuloAnchor{static_cast<VertexId>(rng() % verts),
                                     Rational(static_cast<int>(rng() % (2 * n)), 2)};
        }
        const auto pred = modulo_predicate(g, spec);
        try {
          const Orientation d = find_modulo_orientation(g, spec);
          tally.check(check_predicate(g, d, pred).empty(), "postcondition");
        } catch (const Error& e) {
          tally.check(false, std::string("solver raised ") + e.what());
        }
        if (g.edge_count() <= 12) {
          ++oracle_checked;
          tally.check(enumerate_orientations(g, pred).has_value(), "oracle");
        }
      }
    }
  }
  return {tally.failures() == 0,
          tally.summary() + ", " + std::to_string(oracle_checked) + " oracle-confirmed"};
}

Outcome criterion5() {
  const MultiGraph g = gen::triangle_times(16);
  PQSpec spec{VertexIntMap{14, 15, 15}, VertexIntMap{16, 17, 17}, 2, std::nullopt, std::nullopt};
  const VertexIntMap t{14, 17, 17};
  Tally tally;
  tally.check(tree_connectivity(g) >= exact_tree_requirement(2), "tree connectivity");
  try {
    const ExactResult r = exact_pq(g, spec, t, VertexId{0});
    std::vector<int> out(r.orientation.out_degrees().begin(), r.orientation.out_degrees().end());
    tally.check(out == std::vector<int>{14, 17, 17}, "out-degrees");
    tally.check(r.s.sum() == 0, "sum s");
    tally.check(r.zero_sum_mass <= 4, "zero-sum mass");
    tally.check(check_predicate(g, r.orientation, exact_predicate(t)).empty(), "exact check");
  } catch (const Error& e) {
    tally.check(false, e.what());
  }
  const PQSpec none{VertexIntMap{15, 15, 15}, VertexIntMap{17, 17, 17}, 2, std::nullopt,
                    std::nullopt};
  tally.check(!find_t(g, none).has_value(), "NONE case");
  return {tally.failures() == 0, tally.summary()};
}

Outcome criterion6() {
  const MultiGraph g = gen::triangle_times(8);
  Tally tally;
  for (Rational x : {Rational(0), Rational(1, 2), Rational(1), Rational(3, 2)}) {
    PQSpec spec{VertexIntMap{7, 8, 8}, VertexIntMap{9, 9, 10}, 2, VertexId{0}, x};
    try {
      const DefectiveResult r = defective_pq(g, spec);
      tally.check(check_predicate(g, r.orientation, defective_predicate(spec)).empty(),
                  "x = " + to_string(x));
    } catch (const Error& e) {
      tally.check(false, e.what());
    }
  }
  return {tally.failures() == 0, tally.summary()};
}

Outcome criterion7() {
  Tally tally;
  gen::Rng rng(707);
  const Rational eps_values[] = {Rational(0), Rational(1, 3), Rational(1, 2), Rational(2, 3),
                                 Rational(1)};
  int accepted = 0;
  for (int attempt = 0; attempt < 200000 && accepted < 500; ++attempt) {
    const Rational eps = eps_values[accepted % 5];
    const int n = 2 + static_cast<int>(rng() % 4);
    const MultiGraph g = gen::random_connected(rng, n, n - 1 + static_cast<int>(rng() % 10));
    const Orientation d = random_orientation(rng, g);
    const auto f = epsilon_targets(g, d, eps);
    if (!std::all_of(f.begin(), f.end(), [](const Rational& r) { return r.denominator() == 1; })) {
      continue;
    }
    ++accepted;
    const Orientation e = reorient_epsilon(g, d, eps);
    bool exact = true;
    for (VertexId v = 0; v < n; ++v) exact = exact && e.out_degree(v) == f[v].numerator();
    tally.check(exact, "d+ = f");
    if (eps == Rational(1)) {
      tally.check(std::equal(e.out_degrees().begin(), e.out_degrees().end(),
                             d.out_degrees().begin()),
                  "eps = 1 reproduces D");
    }
  }
  tally.check(accepted == 500, "only " + std::to_string(accepted) + " integral triples");

  // Deviations in {0, +-k/2}: disjoint k-bundles plus a directed Hamiltonian cycle.
  for (int round = 0; round < 200; ++round) {
    const int k = 3 + 2 * static_cast<int>(rng() % 3);
    const int k0 = 1 + 2 * static_cast<int>(rng() % ((k + 1) / 2));
    const int n = 3 + static_cast<int>(rng() % 6);
    std::vector<VertexId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back({perm[i], perm[(i + 1) % n]});
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int i = 0; i + 1 < n; i += 2) {
      if (rng() % 3 == 0) continue;
      for (int c = 0; c < k; ++c) edges.push_back({perm[i], perm[i + 1]});
    }
    const MultiGraph g(n, edges);
    const Orientation d = Orientation::all_forward(g);
    const Orientation s = reorient_scale_odd(g, d, k, k0);
    bool mapped = true;
    for (VertexId v = 0; v < n; ++v) {
      const int before = 2 * d.out_degree(v) - g.degree(v);  // 2 * deviation
      const int after = 2 * s.out_degree(v) - g.degree(v);
      const int want = before == 0 ? 0 : (before > 0 ? k0 : -k0);
      mapped = mapped && (before == 0 || before == k || before == -k) && after == want;
    }
    tally.check(mapped, "odd scaling k=" + std::to_string(k) + " k0=" + std::to_string(k0));
  }
  return {tally.failures() == 0, tally.summary()};
}

Outcome criterion8() {
  Tally tally;
  const std::vector<std::pair<std::string, MultiGraph>> corpus = {
      {"C3", gen::cycle(3)},
      {"K4", gen::complete(4)},
      {"doubled triangle", gen::triangle_times(2)},
      {"triangle x16", gen::triangle_times(16)},
  };
  std::ostringstream values;
  for (const auto& [name, g] : corpus) {
    const int expected = brute::nash_williams(g);
    const int got = tree_connectivity(g);
    values << " " << name << "=" << got;
    tally.check(got == expected, name + " tree connectivity");
    try {
      validate_packing(g, pack_spanning_trees(g, got));
      tally.check(true, "");
    } catch (const Error& e) {
      tally.check(false, name + " packing: " + e.what());
    }
  }
  gen::Rng rng(808);
  for (int round = 0; round < 200; ++round) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const MultiGraph g = gen::random_tree_connected(rng, n, 2, static_cast<int>(rng() % 6));
    const TreePacking packing = pack_spanning_trees(g, 2);
    validate_packing(g, packing);
    const EulerianSplit split = spanning_eulerian_from_pair(g, packing.trees[0], packing.trees[1]);
    tally.check(connected_spanning(g, split.eulerian), "split connected");
    tally.check(odd_vertices(g, split.eulerian).empty(), "split even");
  }
  return {tally.failures() == 0, tally.summary() + ";" + values.str()};
}

Outcome criterion9() {
  Tally tally;
  gen::Rng rng(909);
  int instances_run = 0;
  std::map<std::string, int> steps;
  for (int attempt = 0; attempt < 100000 && instances_run < 100; ++attempt) {
    auto prob = instances::random_list_problem(rng, 12);
    if (!prob) continue;
    ++instances_run;
    tally.check(enumerate_orientations(prob->g, list_predicate(*prob)).has_value(), "oracle");
    try {
      const ListResult r = sparse_list_orientation(*prob);
      tally.check(check_list_orientation(*prob, r.orientation).empty(), "postconditions");
      for (const ListTraceEntry& entry : r.trace) ++steps[std::string(to_string(entry.step))];
    } catch (const Error& e) {
      tally.check(false, std::string("solver: ") + e.what());
    }
  }
  tally.check(instances_run == 100, "only " + std::to_string(instances_run) + " instances");
  std::string used;
  for (const auto& [name, count] : steps) used += " " + name + "=" + std::to_string(count);
  return {tally.failures() == 0,
          std::to_string(instances_run) + " instances, " + tally.summary() + "; steps" + used};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, 300, criterion1}, {2, 120, criterion2}, {3, 600, criterion3},
      {4, 600, criterion4}, {5, 60, criterion5},  {6, 30, criterion6},
      {7, 600, criterion7}, {8, 600, criterion8}, {9, 600, criterion9},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("uncaught: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.limit_seconds) {
      outcome.pass = false;
      outcome.detail += "; over time limit";
    }
    failed += outcome.pass ? 0 : 1;
    std::printf("criterion %d: %s  %s  [%.1fs]\n", c.id, outcome.pass ? "PASS" : "FAIL",
                outcome.detail.c_str(), seconds);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
