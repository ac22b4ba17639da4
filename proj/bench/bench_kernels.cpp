// Serial vs parallel kernels. Thread counts are passed as the benchmark arg;
// 0 runs the serial reference.

#include <benchmark/benchmark.h>

#include <random>

#include "groth/grothendieck.hpp"
#include "groth/identities.hpp"
#include "groth/suite.hpp"

using namespace groth;

namespace {

void BM_Mul(benchmark::State& state) {
    Universe u(4, 4);
    std::mt19937_64 rng(1);
    Polynomial p = random_polynomial(u, rng, 300, 6);
    Polynomial q = random_polynomial(u, rng, 300, 6);
    const int t = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(t == 0 ? mul_serial(p, q) : mul_parallel(p, q, t));
}

void BM_Determinant(benchmark::State& state) {
    Universe u(4, 4);
    PolyMatrix m = vandermonde_lemma_matrix(4, u);
    const int t = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(t == 0 ? determinant_serial(m) : determinant_parallel(m, t));
}

void BM_TableauSum(benchmark::State& state) {
    const Partition shape{3, 2, 1};
    Universe u(4, required_y(shape, 4));
    const int t = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(t == 0 ? tableau_sum_serial(shape, 4, u) : tableau_sum_parallel(shape, 4, u, t));
}

void BM_SubsetSum(benchmark::State& state) {
    const int n = 5, k = 2;
    const Partition lambda{2, 1};
    Universe base(k, 4), u(n, 4);
    Polynomial g = g_tableau(lambda, k, base);
    SubsetFn term = [&](const Subset& s) {
        SubsetTerm c = clear_denominator_gm(s, n, u);
        return Polynomial::constant(u, c.sign) * c.cofactor * relabel_x(g, s, u);
    };
    const int t = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(t == 0 ? subset_sum_serial(n, k, u, term) : subset_sum_parallel(n, k, u, term, t));
}

void BM_GmIdentity(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(verify_gm_type(Partition{3, 2}, 2, 4));
}

}  // namespace

BENCHMARK(BM_Mul)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Determinant)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TableauSum)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SubsetSum)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GmIdentity)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
