#include <benchmark/benchmark.h>

#include "qpaths/compact/compact.hpp"
#include "qpaths/graphs/gamma.hpp"
#include "qpaths/qsystem/qsystem.hpp"
#include "qpaths/qsystem/weights.hpp"
#include "qpaths/rank2/rank2.hpp"
#include "qpaths/totalpos/factorization.hpp"

using namespace qp;

// Fresh context per iteration so memoization does not hide the mutation cost.
static void BM_ComputeR(benchmark::State& state) {
    const int r = static_cast<int>(state.range(0));
    const int n = static_cast<int>(state.range(1));
    const Seed seed(MotzkinPath::zero(r));
    for (auto _ : state) {
        QSystem q(seed);
        benchmark::DoNotOptimize(q.R(1, n));
    }
}
BENCHMARK(BM_ComputeR)->Args({2, 6})->Args({3, 6})->Args({4, 5})->Unit(benchmark::kMillisecond);

static void BM_DetFormula(benchmark::State& state) {
    const int r = static_cast<int>(state.range(0));
    const Seed seed(MotzkinPath::zero(r));
    for (auto _ : state) benchmark::DoNotOptimize(det_formula_R(seed, r, r + 1));
}
BENCHMARK(BM_DetFormula)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_GammaResolvent(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    const MotzkinPath m({0, 1, 1});
    const auto w = weights_from_seed(Seed(m));
    const auto T = transfer_matrix(build_gamma(m, w));
    for (auto _ : state) benchmark::DoNotOptimize(resolvent_series(T, 0, 0, N));
}
BENCHMARK(BM_GammaResolvent)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_CompactResolvent(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    const MotzkinPath m({0, 1, 1});
    const auto w = weights_from_seed(Seed(m));
    const auto T = build_gamma_prime_direct(m, w.y).transfer();
    for (auto _ : state) benchmark::DoNotOptimize(resolvent_series(T, 0, 0, N));
}
BENCHMARK(BM_CompactResolvent)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_NetworkIdentity(benchmark::State& state) {
    const MotzkinPath m({0, 1, 2});
    for (auto _ : state) benchmark::DoNotOptimize(verify_resolvent_theorem(m, 6));
}
BENCHMARK(BM_NetworkIdentity)->Unit(benchmark::kMillisecond);

static void BM_Rank2ClosedForm(benchmark::State& state) {
    VarRegistry reg;
    const auto s = Rank2System::make(1, 4, reg, 0);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(closed_form_14(s, n));
}
BENCHMARK(BM_Rank2ClosedForm)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
