#include <benchmark/benchmark.h>

#include "spanind/counting.hpp"
#include "spanind/families.hpp"
#include "spanind/search.hpp"
#include "spanind/sets.hpp"
#include "spanind/sphere.hpp"

using namespace spanind;

namespace {

void BM_ball_count(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(l1_ball_count(m, m));
    }
}
BENCHMARK(BM_ball_count)->Arg(8)->Arg(16)->Arg(32);

void BM_signed_sum_table(benchmark::State& state) {
    const AbelianGroup g({25});
    const std::vector<GroupElement> a{{1}, {4}, {6}, {9}, {11}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(signed_sum_table(g, a, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_signed_sum_table)->Arg(2)->Arg(3)->Arg(4);

void BM_independence_number(benchmark::State& state) {
    const AbelianGroup g({38});
    const std::vector<GroupElement> a{{1}, {7}, {11}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(independence_number(g, a));
    }
}
BENCHMARK(BM_independence_number);

void BM_min_spanning_size(benchmark::State& state) {
    const std::int64_t n = state.range(0);
    const int s = static_cast<int>(state.range(1));
    for (auto _ : state) {
        SearchTask task{AbelianGroup({n}), SearchMode::MinSpanning, s};
        benchmark::DoNotOptimize(min_spanning_size(task));
    }
}
BENCHMARK(BM_min_spanning_size)->Args({35, 2})->Args({34, 2})->Args({104, 3});

void BM_max_independent_size(benchmark::State& state) {
    const std::int64_t n = state.range(0);
    const int t = static_cast<int>(state.range(1));
    for (auto _ : state) {
        SearchTask task{AbelianGroup({n}), SearchMode::MaxIndependent, t};
        task.unit_orbit_reduction = true;
        benchmark::DoNotOptimize(max_independent_size(task));
    }
}
BENCHMARK(BM_max_independent_size)->Args({47, 4})->Args({87, 5})->Args({160, 6});

void BM_q3_row(benchmark::State& state) {
    const std::int64_t n = state.range(0);
    for (auto _ : state) {
        SearchTask task{AbelianGroup({n}), SearchMode::MaxIndependent, 3};
        task.unit_orbit_reduction = true;
        benchmark::DoNotOptimize(max_independent_size(task));
    }
}
BENCHMARK(BM_q3_row)->Arg(60)->Arg(77);

void BM_lift_and_verify(benchmark::State& state) {
    const std::vector<std::int64_t> freqs{1, 4, 6, 9, 11};
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_design(lift_to_sphere(freqs, 25), 3));
    }
}
BENCHMARK(BM_lift_and_verify);

void BM_exact_design_check(benchmark::State& state) {
    const std::vector<std::int64_t> freqs{1, 4, 6, 9, 11};
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_lifted_design_exact(freqs, 25, 3));
    }
}
BENCHMARK(BM_exact_design_check);

}  // namespace

BENCHMARK_MAIN();
