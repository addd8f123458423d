#include <benchmark/benchmark.h>

#include "mtcomb/enumerate.hpp"
#include "mtcomb/interlace.hpp"
#include "mtcomb/phi_poset.hpp"
#include "mtcomb/qsym.hpp"
#include "mtcomb/stats.hpp"
#include "mtcomb/weak_dag.hpp"

using namespace mtcomb;

static void BM_Enumerate(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        long long count = 0;
        enumerate_mt(n, [&](const MonotoneTriangle&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_Enumerate)->DenseRange(4, 7);

static void BM_HMin(benchmark::State& state) {
    Subset I = Subset::of(8, {2, 5}), J = Subset::of(8, {1, 4, 6, 8});
    for (auto _ : state) benchmark::DoNotOptimize(h_min(I, J));
}
BENCHMARK(BM_HMin);

static void BM_DescentDistribution(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(descent_distribution(n));
}
BENCHMARK(BM_DescentDistribution)->DenseRange(5, 7);

static void BM_WeakOrderDag(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        WeakOrderDag dag(n);
        benchmark::DoNotOptimize(dag.size());
    }
}
BENCHMARK(BM_WeakOrderDag)->DenseRange(4, 5);

static void BM_ElLexOrder(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(el_lex_order(n));
}
BENCHMARK(BM_ElLexOrder)->DenseRange(4, 5);

static void BM_MProduct(benchmark::State& state) {
    QSymElement x, y;
    x.basis = y.basis = QSymBasis::M;
    x.add(Composition({1, 2, 1}), 1);
    y.add(Composition({2, 1}), 1);
    for (auto _ : state) benchmark::DoNotOptimize(m_product(x, y));
}
BENCHMARK(BM_MProduct);

BENCHMARK_MAIN();
