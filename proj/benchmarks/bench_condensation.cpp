#include <benchmark/benchmark.h>

#include <random>

#include "dodgson/condensation.hpp"
#include "dodgson/oracle.hpp"
#include "dodgson/repair.hpp"

namespace {

using namespace dodgson;

SymMatrix random_matrix(std::size_t n, double zero_prob, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> value(-9, 9);
    std::bernoulli_distribution zero(zero_prob);
    SymMatrix m(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            int v = zero(rng) ? 0 : value(rng);
            if (v == 0 && zero_prob == 0.0) v = 1;
            m(r, c) = Polynomial(Rational(v));
        }
    }
    return m;
}

void BM_CondenseZeroFree(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const SymMatrix a = random_matrix(n, 0.0, 1);
    for (auto _ : state) {
        try {
            benchmark::DoNotOptimize(auto_repair(a, Strategy::PerturbOriginal).value);
        } catch (const Error& e) {
            state.SkipWithError(e.what());
            break;
        }
    }
}
BENCHMARK(BM_CondenseZeroFree)->DenseRange(4, 16, 4);

void BM_RepairZeroDense(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const SymMatrix a = random_matrix(n, 0.5, 2);
    for (auto _ : state) benchmark::DoNotOptimize(auto_repair(a, Strategy::PerturbOriginal).value);
}
BENCHMARK(BM_RepairZeroDense)->DenseRange(4, 7, 1);

void BM_Bareiss(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const SymMatrix a = random_matrix(n, 0.0, 1);
    for (auto _ : state) benchmark::DoNotOptimize(det_bareiss(a));
}
BENCHMARK(BM_Bareiss)->DenseRange(4, 16, 4);

}  // namespace

BENCHMARK_MAIN();
