#include <benchmark/benchmark.h>

#include "boxcalc/closed_form.hpp"
#include "boxcalc/operators.hpp"
#include "boxcalc/piecewise.hpp"
#include "boxcalc/rational.hpp"
#include "boxcalc/sequences.hpp"

using boxcalc::PiecewisePoly;
using boxcalc::Rational;
using boxcalc::SequenceCache;
using boxcalc::SequenceKind;

namespace {

// Each iteration builds its own cache so the measurement covers the full
// recursion, not a lookup into the process-wide memo.
void BM_build_f(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        SequenceCache cache(SequenceKind::f);
        benchmark::DoNotOptimize(cache.element(n));
    }
}
BENCHMARK(BM_build_f)->Arg(8)->Arg(16)->Arg(24);

void BM_build_g(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        SequenceCache cache(SequenceKind::g);
        benchmark::DoNotOptimize(cache.element(n));
    }
}
BENCHMARK(BM_build_g)->Arg(8)->Arg(16)->Arg(24);

void BM_eval_f_closed(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Rational x(3, 7);
    for (auto _ : state) benchmark::DoNotOptimize(boxcalc::eval_f_closed(n, x));
}
BENCHMARK(BM_eval_f_closed)->Arg(8)->Arg(16)->Arg(24);

void BM_eval_g_closed(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Rational x(3, 7);
    for (auto _ : state) benchmark::DoNotOptimize(boxcalc::eval_g_closed(n, x));
}
BENCHMARK(BM_eval_g_closed)->Arg(8)->Arg(16)->Arg(24);

void BM_eval_piecewise(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    SequenceCache cache(SequenceKind::g);
    const PiecewisePoly gn = cache.element(n);
    const Rational x(3, 7);
    for (auto _ : state) benchmark::DoNotOptimize(gn.eval(x, boxcalc::Side::interior));
}
BENCHMARK(BM_eval_piecewise)->Arg(8)->Arg(16)->Arg(24);

void BM_window_K(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    SequenceCache cache(SequenceKind::f);
    const PiecewisePoly fn = cache.element(n);
    for (auto _ : state) benchmark::DoNotOptimize(boxcalc::window_K(fn));
}
BENCHMARK(BM_window_K)->Arg(4)->Arg(8)->Arg(16);

void BM_diff_L(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    SequenceCache cache(SequenceKind::f);
    const PiecewisePoly fn = cache.element(n);
    for (auto _ : state) benchmark::DoNotOptimize(boxcalc::diff_L(fn));
}
BENCHMARK(BM_diff_L)->Arg(4)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
