// Microbenchmarks for the hot paths: degree evaluation per strategy, the
// per-subset measures as the frame grows, dense materializations, and the
// full theorem sweep.

#include <cstdint>
#include <vector>

#include <benchmark/benchmark.h>

#include "dnt/dnt.hpp"

namespace {

using dnt::NonExclusivityStrategy;
using dnt::SubsetIndex;

dnt::oracle::RandomInstance instance_of(std::size_t frame_size,
                                        NonExclusivityStrategy strategy) {
  return dnt::oracle::random_instance(2024, frame_size, strategy, true);
}

NonExclusivityStrategy strategy_arg(const benchmark::State& state) {
  switch (state.range(0)) {
    case 1: return NonExclusivityStrategy::element_derived;
    case 2: return NonExclusivityStrategy::explicit_table;
    default: return NonExclusivityStrategy::exclusive;
  }
}

void BM_degree_eval(benchmark::State& state) {
  const auto inst = instance_of(8, strategy_arg(state));
  const auto& ne = inst.nonexclusivity;
  const SubsetIndex universe = inst.dnumber.frame().universe();
  SubsetIndex x = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ne.u(x, universe ^ x));
    x = (x % universe) + 1;
  }
}
BENCHMARK(BM_degree_eval)->Arg(0)->Arg(1)->Arg(2);

void BM_bel_query(benchmark::State& state) {
  const auto inst = instance_of(static_cast<std::size_t>(state.range(0)),
                                NonExclusivityStrategy::element_derived);
  const SubsetIndex subset = inst.dnumber.frame().universe() >> 1;
  for (auto _ : state)
    benchmark::DoNotOptimize(dnt::bel(inst.dnumber, inst.nonexclusivity, subset));
}
BENCHMARK(BM_bel_query)->DenseRange(2, 8, 2);

void BM_pl_query(benchmark::State& state) {
  const auto inst = instance_of(static_cast<std::size_t>(state.range(0)),
                                NonExclusivityStrategy::element_derived);
  const SubsetIndex subset = inst.dnumber.frame().universe() >> 1;
  for (auto _ : state)
    benchmark::DoNotOptimize(dnt::pl(inst.dnumber, inst.nonexclusivity, subset));
}
BENCHMARK(BM_pl_query)->DenseRange(2, 8, 2);

void BM_pl_vector(benchmark::State& state) {
  const auto inst = instance_of(static_cast<std::size_t>(state.range(0)),
                                NonExclusivityStrategy::element_derived);
  for (auto _ : state)
    benchmark::DoNotOptimize(dnt::pl_vector(inst.dnumber, inst.nonexclusivity));
}
BENCHMARK(BM_pl_vector)->DenseRange(4, 8, 2);

void BM_matrix_build(benchmark::State& state) {
  const auto inst = instance_of(static_cast<std::size_t>(state.range(0)),
                                NonExclusivityStrategy::explicit_table);
  for (auto _ : state)
    benchmark::DoNotOptimize(inst.nonexclusivity.matrix());
}
BENCHMARK(BM_matrix_build)->DenseRange(4, 8, 2);

void BM_theorem_sweep(benchmark::State& state) {
  const auto inst = instance_of(static_cast<std::size_t>(state.range(0)),
                                NonExclusivityStrategy::element_derived);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        dnt::verify_theorems(inst.dnumber, inst.nonexclusivity));
}
BENCHMARK(BM_theorem_sweep)->DenseRange(4, 8, 2);

void BM_instance_generation(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(dnt::oracle::random_instance(
        seed++, 8, NonExclusivityStrategy::explicit_table, true));
}
BENCHMARK(BM_instance_generation);

}  // namespace

BENCHMARK_MAIN();
