#include <benchmark/benchmark.h>

#include <gpm/fractal.hpp>
#include <gpm/pascal.hpp>
#include <gpm/special.hpp>
#include <gpm/zero_algebra.hpp>

using namespace gpm;

static void BM_FastDigitPath(benchmark::State &state)
{
    const auto q = static_cast<Index>(state.range(0));
    for (auto _ : state) {
        for (Index n = 0; n < 256; ++n) {
            for (Index m = 0; m <= n; m += 7) {
                benchmark::DoNotOptimize(fast_gbinom_fractal(q, n, m));
            }
        }
    }
}
BENCHMARK(BM_FastDigitPath)->Arg(2)->Arg(3)->Arg(5);

static void BM_FactorialGbinom(benchmark::State &state)
{
    const auto q = static_cast<Index>(state.range(0));
    const BSequence b = BSequence::fractal(q, Rational(static_cast<std::int64_t>(q)));
    for (auto _ : state) {
        for (Index n = 0; n < 256; ++n) {
            for (Index m = 0; m <= n; m += 7) {
                benchmark::DoNotOptimize(gbinom(b, n, m));
            }
        }
    }
}
BENCHMARK(BM_FactorialGbinom)->Arg(2)->Arg(3)->Arg(5);

static void BM_FractalMatrix(benchmark::State &state)
{
    const auto size = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fractal_matrix(Rational(2), 2, size));
    }
}
BENCHMARK(BM_FractalMatrix)->Arg(16)->Arg(64)->Arg(128);

static void BM_PrimeFactorization(benchmark::State &state)
{
    const auto size = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(pascal_prime_factorization(size));
    }
}
BENCHMARK(BM_PrimeFactorization)->Arg(32)->Arg(64);

static void BM_IdentityCheck(benchmark::State &state)
{
    const TriangularMatrix m = fractal_matrix(Rational(3), 3, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(identity_check(m));
    }
}
BENCHMARK(BM_IdentityCheck)->Arg(16)->Arg(24);

static void BM_QUmbralInverseProduct(benchmark::State &state)
{
    const auto size = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(multiply(q_umbral_matrix(Rational(2), size), q_umbral_inverse(Rational(2), size)));
    }
}
BENCHMARK(BM_QUmbralInverseProduct)->Arg(16)->Arg(32);

static void BM_TMatrixRoutes(benchmark::State &state)
{
    const auto route = state.range(0);
    for (auto _ : state) {
        if (route == 0) {
            benchmark::DoNotOptimize(t_matrix(3, 81));
        } else if (route == 1) {
            benchmark::DoNotOptimize(t_matrix_kronecker(3, 81));
        } else {
            benchmark::DoNotOptimize(t_matrix_overlay(3, 81));
        }
    }
}
BENCHMARK(BM_TMatrixRoutes)->Arg(0)->Arg(1)->Arg(2);

BENCHMARK_MAIN();
