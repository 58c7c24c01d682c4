#include <random>

#include <benchmark/benchmark.h>

#include "superalg/families.hpp"
#include "superalg/homalg.hpp"
#include "superalg/matrix.hpp"
#include "superalg/pbw.hpp"
#include "superalg/qci.hpp"

using namespace sa;

namespace {

Matrix random_matrix(int n, int p, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> d(0, p - 1);
    Matrix M(n, n, p);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) M.set(r, c, d(rng));
    return M;
}

void BM_Rank(benchmark::State& st) {
    const int n = static_cast<int>(st.range(0));
    Matrix M = random_matrix(n, 7, 3);
    for (auto _ : st) benchmark::DoNotOptimize(rank(M));
    st.SetComplexityN(n);
}
BENCHMARK(BM_Rank)->RangeMultiplier(2)->Range(32, 512)->Complexity(benchmark::oNCubed);

void BM_Multiply(benchmark::State& st) {
    const int n = static_cast<int>(st.range(0));
    Matrix A = random_matrix(n, 5, 1), B = random_matrix(n, 5, 2);
    for (auto _ : st) benchmark::DoNotOptimize(A * B);
    st.SetComplexityN(n);
}
BENCHMARK(BM_Multiply)->RangeMultiplier(2)->Range(32, 512)->Complexity(benchmark::oNCubed);

void BM_BuildOsp(benchmark::State& st) {
    const int p = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(make_algebra(preset_presentation("osp12", p)));
}
BENCHMARK(BM_BuildOsp)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_Koszul(benchmark::State& st) {
    QciSpec s{{3, 4, 3}, {{1, 2, 3}, {1, 1, 4}, {1, 1, 1}}, {}};
    const int D = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(build_koszul(s, 5, D));
}
BENCHMARK(BM_Koszul)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_HomBasis(benchmark::State& st) {
    const int p = static_cast<int>(st.range(0));
    Module P = make_module({Family::P, 1}, p);
    for (auto _ : st) benchmark::DoNotOptimize(hom_dim(P, P));
}
BENCHMARK(BM_HomBasis)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_Decompose(benchmark::State& st) {
    const int p = static_cast<int>(st.range(0));
    Module M = direct_sum(make_module({Family::P, 0}, p), make_module({Family::W, 1, 2}, p));
    for (auto _ : st) benchmark::DoNotOptimize(decompose(M));
}
BENCHMARK(BM_Decompose)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_MinimalResolution(benchmark::State& st) {
    const int D = static_cast<int>(st.range(0));
    Module V = make_module({Family::V, 0}, 3);
    for (auto _ : st) benchmark::DoNotOptimize(minimal_resolution(V, D));
}
BENCHMARK(BM_MinimalResolution)->DenseRange(2, 8, 3)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
