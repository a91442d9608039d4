// Micro-benchmarks for the hot paths: wedge products, occupancy-projector
// construction (coordinate fast path vs. the general compressed path),
// decomposability decisions, and a full axiom sweep.

#include <benchmark/benchmark.h>

#include "fermereo/antisym.hpp"
#include "fermereo/assembly.hpp"
#include "fermereo/axioms.hpp"
#include "fermereo/occupancy.hpp"
#include "fermereo/rng.hpp"
#include "fermereo/subspace.hpp"

namespace {

using namespace fermereo;

void BM_WedgeDegreeTwoPair(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  Rng rng(1);
  const AntiSymTensor a = random_antisym_tensor(dim, 2, rng);
  const AntiSymTensor b = random_antisym_tensor(dim, 2, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wedge(a, b));
  }
}
BENCHMARK(BM_WedgeDegreeTwoPair)->Arg(6)->Arg(10)->Arg(14);

void BM_OccupancyProjectorCoordinateBase(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const Subspace base = Subspace::coordinate(dim, (Mask{1} << (dim / 2)) - 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(OccupancyProjector(base, dim / 2, 1));
  }
}
BENCHMARK(BM_OccupancyProjectorCoordinateBase)->Arg(8)->Arg(12);

void BM_OccupancyProjectorGeneralBase(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  Rng rng(2);
  const Subspace base = random_subspace(dim, dim / 2, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(OccupancyProjector(base, dim / 2, 1));
  }
}
BENCHMARK(BM_OccupancyProjectorGeneralBase)->Arg(4)->Arg(6);

void BM_ApplyOccupancyMatrixFree(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  Rng rng(3);
  const Subspace base = random_subspace(dim, dim / 2, rng);
  const AntiSymTensor v = random_antisym_tensor(dim, dim / 2, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_occupancy(base, dim / 2, 1, v));
  }
}
BENCHMARK(BM_ApplyOccupancyMatrixFree)->Arg(4)->Arg(6);

void BM_IsDecomposableGeneric(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  Rng rng(4);
  const AntiSymTensor generic = random_antisym_tensor(dim, 2, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_decomposable(generic));
  }
}
BENCHMARK(BM_IsDecomposableGeneric)->Arg(4)->Arg(8)->Arg(12);

void BM_IsDecomposableConstructed(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  Rng rng(5);
  const AntiSymTensor product = random_decomposable_state(dim, 3, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_decomposable(product));
  }
}
BENCHMARK(BM_IsDecomposableConstructed)->Arg(4)->Arg(8);

void BM_CheckAxioms(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  std::vector<Eigen::VectorXcd> vs;
  for (int k = 0; k < dim - 1; ++k) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
    v(k) = 1.0;
    vs.push_back(v);
  }
  const Assembly assembly = Assembly::from_vectors(vs);
  RunConfig config;
  config.seed = 6;
  config.samples = 8;
  const SystemSampler sampler = make_system_sampler(assembly, config);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_axioms(assembly, sampler, config));
  }
}
BENCHMARK(BM_CheckAxioms)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
