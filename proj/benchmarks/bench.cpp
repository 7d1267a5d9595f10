#include <benchmark/benchmark.h>

#include "qcomb/groups.hpp"
#include "qcomb/identities.hpp"
#include "qcomb/qfun.hpp"
#include "qcomb/starred.hpp"
#include "qcomb/stirling.hpp"

namespace {

void BM_laurent_multiply(benchmark::State& state) {
    qcomb::LaurentPoly a = qcomb::q_factorial(static_cast<unsigned>(state.range(0)));
    qcomb::LaurentPoly b = qcomb::q_binomial(2 * static_cast<unsigned>(state.range(0)),
                                             static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_laurent_multiply)->Arg(8)->Arg(16)->Arg(32);

void BM_stirling_b_row(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        for (int k = 0; k <= n; ++k) benchmark::DoNotOptimize(qcomb::stirling_b(n, k));
}
BENCHMARK(BM_stirling_b_row)->Arg(10)->Arg(20)->Arg(40);

void BM_bn_sweep(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        long total = 0;
        qcomb::for_each_bn(n, [&](const qcomb::SignedPerm& pi) {
            total += qcomb::stats_b(pi).fmaj;
        });
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_bn_sweep)->Arg(4)->Arg(5)->Arg(6);

void BM_bfmaj_row(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(qcomb::bfmaj_row(n));
}
BENCHMARK(BM_bfmaj_row)->Arg(4)->Arg(5)->Arg(6);

void BM_verify_thm_main_B(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(
            qcomb::verify("thm-main-B", qcomb::Params{.n = n, .k = n / 2}));
}
BENCHMARK(BM_verify_thm_main_B)->Arg(4)->Arg(5)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
