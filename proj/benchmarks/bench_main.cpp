// Micro and step-level timings.

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "ecsldg/field.hpp"
#include "ecsldg/scenarios.hpp"
#include "ecsldg/sldg.hpp"
#include "ecsldg/stepper.hpp"

using namespace ecsldg;

namespace {

void BM_KernelBuild(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const Mesh1D mesh(0.0, 1.0, 128, Boundary::periodic);
  for (auto _ : state) benchmark::DoNotOptimize(ShiftKernel(k, mesh, 0.37 / 128));
}
BENCHMARK(BM_KernelBuild)->DenseRange(1, 3);

void BM_AdvectLine(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const Mesh1D mesh(0.0, 1.0, n, Boundary::periodic);
  const ShiftKernel kernel(k, mesh, 2.37 / n);
  std::vector<double> in(static_cast<std::size_t>(n) * (k + 1)), out(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) in[i] = std::sin(0.1 * static_cast<double>(i));
  for (auto _ : state) {
    advect_nodal_line(kernel, Boundary::periodic, n, in, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(in.size()));
}
BENCHMARK(BM_AdvectLine)->Args({1, 128})->Args({2, 128})->Args({3, 128})->Args({2, 512});

void BM_Moments(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto s = initialize(weak_landau(), n, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(compute_moments(s.f));
}
BENCHMARK(BM_Moments)->Arg(64)->Arg(128);

void BM_Step(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto scheme = state.range(1) == 0 ? SplittingScheme::strang() : SplittingScheme::ten_lie();
  auto s = initialize(weak_landau(), n, n, 2);
  for (auto _ : state) advance(s, 0.05, scheme, FieldMode::ec);
  state.SetLabel(scheme.name());
}
BENCHMARK(BM_Step)->Args({64, 0})->Args({128, 0})->Args({128, 1})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
