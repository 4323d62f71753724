#include <benchmark/benchmark.h>

#include "quaddec/families.hpp"
#include "quaddec/gqd.hpp"
#include "quaddec/mps.hpp"

using namespace quaddec;

namespace {

const QuadMap generic_map{Rational(1, 3), Rational(-2, 5), Rational(3, 7)};

RecurrenceCoeffs jacobi_rc()
{
    return build("jacobi", {{"alpha", Rational(1, 2)}, {"beta", Rational(-1, 3)}}).rc;
}

// Rational coefficients grow with degree, so this mostly measures GMP.
void poly_mul(benchmark::State& state)
{
    const auto seq = generate_orthogonal(jacobi_rc(), static_cast<std::size_t>(state.range(0)));
    const Poly& f = seq[seq.size() - 1];
    for (auto _ : state) {
        benchmark::DoNotOptimize(f * f);
    }
}
BENCHMARK(poly_mul)->RangeMultiplier(2)->Range(4, 32);

void direct(benchmark::State& state)
{
    const auto depth = static_cast<std::size_t>(state.range(0));
    const auto seq = generate_orthogonal(jacobi_rc(), 2 * depth + 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gqd_direct(seq, generic_map, depth));
    }
}
BENCHMARK(direct)->RangeMultiplier(2)->Range(4, 16);

void structured(benchmark::State& state)
{
    const auto depth = static_cast<std::size_t>(state.range(0));
    const auto rc = jacobi_rc();
    for (auto _ : state) {
        benchmark::DoNotOptimize(gqd_structured(StructureCoeffs::from_recurrence(rc), generic_map, depth));
    }
}
BENCHMARK(structured)->RangeMultiplier(2)->Range(4, 16);

void orthogonal(benchmark::State& state)
{
    const auto depth = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        // Fresh coefficients each round so memoization does not hide the work.
        benchmark::DoNotOptimize(gqd_orthogonal(jacobi_rc(), generic_map, depth));
    }
}
BENCHMARK(orthogonal)->RangeMultiplier(2)->Range(4, 16);

void anbn(benchmark::State& state)
{
    const auto depth = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(anbn_recurrence(jacobi_rc(), generic_map, depth));
    }
}
BENCHMARK(anbn)->RangeMultiplier(2)->Range(4, 16);

void classify(benchmark::State& state)
{
    const auto res = gqd_orthogonal(jacobi_rc(), generic_map, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify_principal(res.P));
        benchmark::DoNotOptimize(classify_secondary(res.a_seq));
    }
}
BENCHMARK(classify)->RangeMultiplier(2)->Range(4, 16);

} // namespace

BENCHMARK_MAIN();
