#include <benchmark/benchmark.h>

#include "kktco/correspondence.hpp"

namespace {

using namespace kktco;

FiniteAlgebra spin(std::int64_t n) { return generate(parse_zoo_spec("spin-factor:" + std::to_string(n))); }

void BM_build_kkt(benchmark::State& state)
{
    const FiniteAlgebra j = spin(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(build_kkt(j));
    state.counters["dim"] = static_cast<double>(build_kkt(j).dim());
}
BENCHMARK(BM_build_kkt)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

void BM_delta_L_global(benchmark::State& state)
{
    const FiniteCoalgebra c = dualize_algebra(spin(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(delta_L_global(c));
}
BENCHMARK(BM_delta_L_global)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_symmetric_matrices_kkt(benchmark::State& state)
{
    const FiniteAlgebra j = generate(parse_zoo_spec("symmetric-matrices:" + std::to_string(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(build_kkt(j));
}
BENCHMARK(BM_symmetric_matrices_kkt)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_theorem2_verify(benchmark::State& state)
{
    const FiniteCoalgebra c = dualize_algebra(spin(state.range(0)));
    const LatticeContext ctx = make_context(c);
    ScalarSampler sampler(7, c.field());
    const Subspace v = random_coideal(c, sampler);
    for (auto _ : state) benchmark::DoNotOptimize(theorem2_verify(ctx, v));
}
BENCHMARK(BM_theorem2_verify)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_theorem3_verify(benchmark::State& state)
{
    const FiniteCoalgebra c = dualize_algebra(spin(state.range(0)));
    const LatticeContext ctx = make_context(c);
    ScalarSampler sampler(7, c.field());
    const Subspace b = random_subcoalgebra(c, sampler);
    for (auto _ : state) benchmark::DoNotOptimize(theorem3_verify(ctx, b));
}
BENCHMARK(BM_theorem3_verify)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_rref_prime_field(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    ScalarSampler sampler(1, Field::prime(2147483647));
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < n; ++i) rows.push_back(sampler.vector(n));
    for (auto _ : state) benchmark::DoNotOptimize(Subspace::span(Field::prime(2147483647), n, rows));
}
BENCHMARK(BM_rref_prime_field)->RangeMultiplier(2)->Range(8, 64);

}  // namespace

BENCHMARK_MAIN();
