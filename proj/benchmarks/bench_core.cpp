#include <benchmark/benchmark.h>

#include <bispec/bispec.hpp>

namespace {

bispec::DifferentialOperator hermite() {
  return bispec::parse_operator("2*x*D1 - D2");
}

bispec::DifferentialOperator random_op(std::size_t order, std::size_t n_max) {
  bispec::SplitMix64 rng(0xb15bec + order);
  for (;;) {
    auto op = bispec::sample_operator(rng, order);
    if (bispec::check_distinct_eigenvalues(op, n_max).ok) return op;
  }
}

void BM_SolveDirectHermite(benchmark::State& state) {
  const auto op = hermite();
  const auto n_max = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto system = bispec::solve_direct_triangular(op, n_max);
    benchmark::DoNotOptimize(system);
  }
}
BENCHMARK(BM_SolveDirectHermite)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_SolveDirectRandomOrder4(benchmark::State& state) {
  const auto n_max = static_cast<std::size_t>(state.range(0));
  const auto op = random_op(4, n_max);
  for (auto _ : state) {
    auto system = bispec::solve_direct_triangular(op, n_max);
    benchmark::DoNotOptimize(system);
  }
}
BENCHMARK(BM_SolveDirectRandomOrder4)->Arg(8)->Arg(16)->Arg(32);

void BM_CompositionCoefficient(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto op = random_op(4, n);
  for (auto _ : state) {
    auto value = bispec::solve_direct_compositions(op, n, 0);
    benchmark::DoNotOptimize(value);
  }
}
BENCHMARK(BM_CompositionCoefficient)->Arg(8)->Arg(10)->Arg(12);

void BM_DeltaTransformRoundTrip(benchmark::State& state) {
  const auto rows = static_cast<std::size_t>(state.range(0));
  bispec::SplitMix64 rng(99);
  bispec::TriangularRows table(rows);
  for (std::size_t n = 0; n < rows; ++n) {
    table[n].resize(n + 1);
    for (auto& v : table[n]) {
      v = bispec::Rational(rng.next_in_range(-9, 9), rng.next_in_range(1, 9));
    }
  }
  for (auto _ : state) {
    auto back = bispec::coefficient_rows_from_delta_rows(
        bispec::delta_rows_from_coefficient_rows(table));
    benchmark::DoNotOptimize(back);
  }
}
BENCHMARK(BM_DeltaTransformRoundTrip)->Arg(8)->Arg(16)->Arg(32);

void BM_ReconstructOperator(benchmark::State& state) {
  const auto n_max = static_cast<std::size_t>(state.range(0));
  const auto op = random_op(3, n_max);
  const auto data = bispec::EigenData::from_eigen_system(
      bispec::solve_direct_triangular(op, n_max));
  for (auto _ : state) {
    auto rec = bispec::reconstruct_operator(data, n_max, 6);
    benchmark::DoNotOptimize(rec);
  }
}
BENCHMARK(BM_ReconstructOperator)->Arg(8)->Arg(12)->Arg(16);

void BM_DetectBandwidth(benchmark::State& state) {
  const auto n_max = static_cast<std::size_t>(state.range(0));
  const auto system = bispec::solve_direct_triangular(hermite(), n_max + 1);
  for (auto _ : state) {
    auto relation = bispec::detect_bandwidth(system, n_max);
    benchmark::DoNotOptimize(relation);
  }
}
BENCHMARK(BM_DetectBandwidth)->Arg(8)->Arg(16)->Arg(32);

void BM_ScanTrialBlock(benchmark::State& state) {
  const auto trials = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto report = bispec::conjecture_scan({3}, trials, 14, 42);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_ScanTrialBlock)->Arg(1)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
