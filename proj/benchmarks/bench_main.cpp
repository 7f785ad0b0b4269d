#include <benchmark/benchmark.h>

#include "semitree/csp.hpp"
#include "semitree/engine.hpp"
#include "semitree/enumeration.hpp"
#include "semitree/grid.hpp"
#include "semitree/sampler.hpp"
#include "semitree/transform.hpp"

namespace {

using namespace semitree;

void BM_rel_C(benchmark::State& state) {
  Sampler sampler(11);
  std::vector<Node> pool = sampler.random_node_set(24);
  size_t i = 0;
  for (auto _ : state) {
    const Node& z = pool[i % pool.size()];
    const Node& x = pool[(i + 7) % pool.size()];
    const Node& y = pool[(i + 13) % pool.size()];
    benchmark::DoNotOptimize(rel_C(z, x, y));
    ++i;
  }
}
BENCHMARK(BM_rel_C);

void BM_witness_grid_5(benchmark::State& state) {
  Sampler sampler(5);
  std::vector<Node> base = sampler.random_node_set(5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(witness_grid(base));
  }
}
BENCHMARK(BM_witness_grid_5);

void BM_embed_5(benchmark::State& state) {
  Sampler sampler(7);
  FiniteStructure s = induced_structure(sampler.random_node_set(5));
  for (auto _ : state) {
    benchmark::DoNotOptimize(embed_structure(s));
  }
}
BENCHMARK(BM_embed_5);

void BM_enumerate_4(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_age_structures(4));
  }
}
BENCHMARK(BM_enumerate_4);

void BM_solve_3var(benchmark::State& state) {
  ConstraintInstance inst = parse_instance("x || y\nC(z, x y)\nz || x\n");
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve(inst));
  }
}
BENCHMARK(BM_solve_3var);

void BM_flatten_6(benchmark::State& state) {
  Sampler sampler(9);
  std::vector<Node> pts = sampler.random_node_set(6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(flatten(pts));
  }
}
BENCHMARK(BM_flatten_6);

}  // namespace

BENCHMARK_MAIN();
