#include <benchmark/benchmark.h>

#include <cstdint>

#include "simpdim/barycentric.hpp"
#include "simpdim/complex.hpp"
#include "simpdim/dimension.hpp"
#include "simpdim/experiments.hpp"
#include "simpdim/genfun.hpp"

using namespace simpdim;

static void BM_whitney_k12(benchmark::State& state) {
  std::vector<std::pair<int, int>> edges;
  for (int j = 1; j < 12; ++j)
    for (int i = 0; i < j; ++i) edges.emplace_back(i, j);
  Graph g(12, edges);
  for (auto _ : state) {
    Complex c = whitney_complex(g);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_whitney_k12);

static void BM_join_house_rabbit(benchmark::State& state) {
  Complex house = Complex::generate(
      {Simplex{2, 3, 5}, Simplex{1, 4}, Simplex{1, 2}, Simplex{3, 4}});
  Complex rabbit =
      Complex::generate({Simplex{1, 2, 3}, Simplex{3, 4}, Simplex{3, 5}});
  for (auto _ : state) {
    Complex j = join(house, rabbit);
    benchmark::DoNotOptimize(j);
  }
}
BENCHMARK(BM_join_house_rabbit);

static void BM_refine_icosahedron(benchmark::State& state) {
  Complex ico = icosahedron();
  for (auto _ : state) {
    Complex r = refine(ico);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_refine_icosahedron);

static void BM_refine_fvector_d10(benchmark::State& state) {
  FVector fv;
  for (int k = 0; k <= 10; ++k) fv.counts.emplace_back(k + 1);
  for (auto _ : state) {
    FVector cur = fv;
    for (int i = 0; i < 100; ++i) cur = refine_fvector(cur);
    benchmark::DoNotOptimize(cur);
  }
}
BENCHMARK(BM_refine_fvector_d10);

static void BM_pf_eigenvector_d40(benchmark::State& state) {
  for (auto _ : state) {
    std::vector<Rat> w = pf_eigenvector(40);
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(BM_pf_eigenvector_d40);

static void BM_limit_constant_d100(benchmark::State& state) {
  for (auto _ : state) {
    Rat c = limit_constant(100);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_limit_constant_d100);

// fresh complexes each iteration, so the memo cache rarely helps
static void BM_dim_inductive_random(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) {
    Complex c = random_complex(6, 8, seed++);
    Rat d = dim_inductive(c);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_dim_inductive_random);

static void BM_sample_er_n40(benchmark::State& state) {
  ErParams params{40, Rat(1, 2), 7};
  std::uint64_t index = 0;
  for (auto _ : state) {
    Graph g = sample_er(params, index++);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_sample_er_n40);

static void BM_delta_max_n5(benchmark::State& state) {
  for (auto _ : state) {
    DeltaMaxResult r = delta_max(5);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_delta_max_n5);

BENCHMARK_MAIN();
