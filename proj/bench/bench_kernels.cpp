// Serial references against the OpenMP kernels on the shipped ideals.

#include "bsroots/acceptance.hpp"
#include "bsroots/gamma.hpp"

#include <benchmark/benchmark.h>

using namespace bsroots;

namespace {

const MonomialIdeal& ideal_at(std::int64_t index)
{
    static const std::vector<ShippedIdeal> ideals = shipped_ideals();
    return ideals.at(static_cast<std::size_t>(index)).ideal;
}

void shipped_args(benchmark::internal::Benchmark* b)
{
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(shipped_ideals().size()); ++i) b->Arg(i);
}

void BM_IntegralityModulusSerial(benchmark::State& state)
{
    const MonomialIdeal& a = ideal_at(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(integrality_modulus_serial(a));
}

void BM_IntegralityModulusParallel(benchmark::State& state)
{
    const MonomialIdeal& a = ideal_at(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(integrality_modulus(a));
}

template<bool Parallel>
void BM_RootsCharp(benchmark::State& state)
{
    const MonomialIdeal& a = ideal_at(state.range(0));
    RootOptions opts;
    opts.parallel = Parallel;
    for (auto _ : state) benchmark::DoNotOptimize(roots_charp(a, opts));
}

template<bool Parallel>
void BM_RootsGamma(benchmark::State& state)
{
    const MonomialIdeal& a = ideal_at(state.range(0));
    GammaOptions opts;
    opts.parallel = Parallel;
    for (auto _ : state) benchmark::DoNotOptimize(roots_gamma(a, opts));
}

}  // namespace

BENCHMARK(BM_IntegralityModulusSerial)->Apply(shipped_args);
BENCHMARK(BM_IntegralityModulusParallel)->Apply(shipped_args);
BENCHMARK(BM_RootsCharp<false>)->Apply(shipped_args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RootsCharp<true>)->Apply(shipped_args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RootsGamma<false>)->Apply(shipped_args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RootsGamma<true>)->Apply(shipped_args)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
