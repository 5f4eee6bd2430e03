// OpenMP kernels against their serial references.
//   ./bench_kernels --benchmark_filter=Mc
// Set OMP_NUM_THREADS to vary the team size.

#include "dunkl/operators.hpp"
#include "dunkl/oracle.hpp"
#include "dunkl/random.hpp"
#include "dunkl/reference.hpp"

#include <benchmark/benchmark.h>

using namespace dunkl;

namespace {

const DunklContext& b3() {
  static const DunklContext ctx = make_context(GroupFamily::B, 3, {Rational(1, 2), Rational(3, 2)});
  return ctx;
}

const Poly& sample_poly() {
  static const Poly p = [] {
    Rng rng(4242);
    return random_poly(3, 8, rng, 12);
  }();
  return p;
}

void McParallel(benchmark::State& state) {
  const Poly p = parse_poly("x1^4*x2^2 - 3*x1*x3 + 1/2*x2^2", 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(mc_sphere_integral(b3(), p, 1, static_cast<std::uint64_t>(state.range(0))));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void McSerial(benchmark::State& state) {
  const Poly p = parse_poly("x1^4*x2^2 - 3*x1*x3 + 1/2*x2^2", 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(reference::mc_sphere_integral_serial(b3(), p, 1, static_cast<std::uint64_t>(state.range(0))));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void LaplacianParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(laplacian(b3(), sample_poly()));
}

void LaplacianSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reference::laplacian_serial(b3(), sample_poly()));
}

void DunklParallel(benchmark::State& state) {
  const RationalVector xi = {Rational(1), Rational(-2), Rational(1, 3)};
  for (auto _ : state) benchmark::DoNotOptimize(dunkl_apply(b3(), xi, sample_poly()));
}

void DunklSerial(benchmark::State& state) {
  const RationalVector xi = {Rational(1), Rational(-2), Rational(1, 3)};
  for (auto _ : state) benchmark::DoNotOptimize(reference::dunkl_apply_serial(b3(), xi, sample_poly()));
}

}  // namespace

BENCHMARK(McParallel)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(McSerial)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(LaplacianParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(LaplacianSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(DunklParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(DunklSerial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
