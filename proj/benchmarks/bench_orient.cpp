#include <benchmark/benchmark.h>

#include "orient/flow_orient.hpp"
#include "orient/generators.hpp"
#include "orient/list_orient.hpp"
#include "orient/modulo_orient.hpp"
#include "orient/pq_orient.hpp"
#include "orient/tree_packing.hpp"

using namespace orient;

namespace {

VertexIntMap balanced_upper(const MultiGraph& g) {
  VertexIntMap q(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) q[v] = (g.degree(v) + 1) / 2;
  return q;
}

void BM_CheckUpper(benchmark::State& state) {
  gen::Rng rng(1);
  const int n = static_cast<int>(state.range(0));
  const MultiGraph g = gen::random_connected(rng, n, 4 * n);
  const VertexIntMap q = balanced_upper(g);
  for (auto _ : state) benchmark::DoNotOptimize(check_upper_feasible(g, q));
}
BENCHMARK(BM_CheckUpper)->RangeMultiplier(4)->Range(16, 1024);

void BM_OrientBounded(benchmark::State& state) {
  gen::Rng rng(2);
  const int n = static_cast<int>(state.range(0));
  const MultiGraph g = gen::random_connected(rng, n, 4 * n);
  VertexIntMap p(n), q(n);
  for (VertexId v = 0; v < n; ++v) {
    p[v] = g.degree(v) / 2;
    q[v] = (g.degree(v) + 1) / 2;
  }
  for (auto _ : state) benchmark::DoNotOptimize(check_bounded_feasible(g, p, q));
}
BENCHMARK(BM_OrientBounded)->RangeMultiplier(4)->Range(16, 1024);

void BM_TreeConnectivity(benchmark::State& state) {
  const MultiGraph g = gen::triangle_times(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tree_connectivity(g));
}
BENCHMARK(BM_TreeConnectivity)->Arg(4)->Arg(16)->Arg(64);

void BM_PackRandom(benchmark::State& state) {
  gen::Rng rng(3);
  const int n = static_cast<int>(state.range(0));
  const MultiGraph g = gen::random_tree_connected(rng, n, 4, n);
  for (auto _ : state) benchmark::DoNotOptimize(pack_spanning_trees(g, 4));
}
BENCHMARK(BM_PackRandom)->Arg(8)->Arg(32)->Arg(128);

void BM_ModuloThree(benchmark::State& state) {
  gen::Rng rng(4);
  const int n = static_cast<int>(state.range(0));
  const MultiGraph g = gen::random_edge_connected(rng, n, 6);
  ModuloSpec spec;
  spec.n = 3;
  spec.residues = VertexIntMap(n);
  spec.residues[0] = g.edge_count() % 3;
  for (auto _ : state) benchmark::DoNotOptimize(find_modulo_orientation(g, spec));
}
BENCHMARK(BM_ModuloThree)->DenseRange(3, 6);

void BM_DefectiveTriangle(benchmark::State& state) {
  const MultiGraph g = gen::triangle_times(8);
  PQSpec spec{VertexIntMap{7, 8, 8}, VertexIntMap{9, 9, 10}, 2, VertexId{0}, Rational(1, 2)};
  for (auto _ : state) benchmark::DoNotOptimize(defective_pq(g, spec));
}
BENCHMARK(BM_DefectiveTriangle);

void BM_ExactTriangle(benchmark::State& state) {
  const MultiGraph g = gen::triangle_times(16);
  const PQSpec spec{VertexIntMap{14, 15, 15}, VertexIntMap{16, 17, 17}, 2, std::nullopt,
                    std::nullopt};
  const VertexIntMap t{14, 17, 17};
  for (auto _ : state) benchmark::DoNotOptimize(exact_pq(g, spec, t, VertexId{0}));
}
BENCHMARK(BM_ExactTriangle);

void BM_SparseListBase(benchmark::State& state) {
  const int mult = static_cast<int>(state.range(0));
  const MultiGraph g = gen::multiply(gen::path(2), mult);
  const std::int64_t half_d = mult / 2;
  SparseListProblem prob{g,
                         0,
                         ListAssignment({{half_d, half_d + 1}, {half_d, half_d + 1}}),
                         VertexIntMap(2),
                         VertexIntMap(2),
                         VertexIntMap(2)};
  for (auto _ : state) benchmark::DoNotOptimize(sparse_list_orientation(prob));
}
BENCHMARK(BM_SparseListBase)->Arg(5)->Arg(9);

}  // namespace
BENCHMARK_MAIN();
