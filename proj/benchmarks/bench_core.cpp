#include <benchmark/benchmark.h>

#include "tricolor/closed_form.hpp"
#include "tricolor/sampling.hpp"
#include "tricolor/transforms.hpp"

using namespace tricolor;

namespace {

void BM_enumerate(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto states = enumerate_states(n, Color(0));
        benchmark::DoNotOptimize(states);
    }
}
BENCHMARK(BM_enumerate)->Arg(3)->Arg(4)->Arg(5)->Arg(6);

void BM_partition_bruteforce(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const EvaluationPoint pt = sample_point(n, 7, 0);
    for (auto _ : state) {
        auto z = partial_partition(n, Color(0), pt);
        benchmark::DoNotOptimize(z);
    }
}
BENCHMARK(BM_partition_bruteforce)->Arg(2)->Arg(3)->Arg(4);

void BM_closed_form(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const EvaluationPoint pt = sample_point(n, 7, 0);
    for (auto _ : state) {
        auto v = scaled_partition_closed_form(n, Color(0), pt);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_closed_form)->Arg(2)->Arg(3)->Arg(4)->Arg(5);

void BM_det_alternant(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const EvaluationPoint pt = sample_point(n, 7, 0);
    const std::vector<CycScalar> us = pt.us();
    for (auto _ : state) {
        auto d = det_alternant(AlternantKind::P, us);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_det_alternant)->Arg(2)->Arg(3)->Arg(4)->Arg(5);

void BM_fwv_context(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const EvaluationPoint pt = sample_point(n, 7, 0);
    for (auto _ : state) {
        FwvContext ctx(bind_point(pt));
        benchmark::DoNotOptimize(ctx.v(Color(1)));
    }
}
BENCHMARK(BM_fwv_context)->Arg(1)->Arg(2)->Arg(3);

void BM_support_poly(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const EvaluationPoint pt = sample_point(n, 7, 0);
    for (auto _ : state) {
        const SupportReport rep = support_check(pt, Color(0), 1);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_support_poly)->Arg(1)->Arg(2)->Arg(3);

} // namespace

BENCHMARK_MAIN();
