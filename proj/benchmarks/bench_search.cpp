#include <benchmark/benchmark.h>

#include "pythia/boxes.hpp"
#include "pythia/triples.hpp"
#include "pythia/two_square.hpp"
#include "pythia/verifier.hpp"

namespace {

void BM_enumerate_triples(benchmark::State& state) {
    const auto max_c = static_cast<pythia::u64>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(pythia::enumerate_triples(max_c, false));
}
BENCHMARK(BM_enumerate_triples)->Arg(1000)->Arg(10000);

void BM_enumerate_boxes(benchmark::State& state) {
    const auto max_t = static_cast<pythia::u64>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(pythia::enumerate_boxes(max_t));
}
BENCHMARK(BM_enumerate_boxes)->Arg(100)->Arg(400);

void BM_enumerate_two_two(benchmark::State& state) {
    const auto max_z = static_cast<pythia::u64>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(pythia::enumerate_two_two(max_z, false));
}
BENCHMARK(BM_enumerate_two_two)->Arg(500)->Arg(5000);

void BM_verify_prop1(benchmark::State& state) {
    const auto bound = static_cast<pythia::u64>(state.range(0));
    const auto jobs = static_cast<unsigned>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(pythia::verify_prop1(bound, jobs));
}
BENCHMARK(BM_verify_prop1)->Args({300, 1})->Args({300, 4})->Args({1000, 4});

void BM_verify_result3(benchmark::State& state) {
    const auto bound = static_cast<pythia::u64>(state.range(0));
    const auto jobs = static_cast<unsigned>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(pythia::verify_result3(bound, jobs));
}
BENCHMARK(BM_verify_result3)->Args({1000, 1})->Args({1000, 4});

}  // namespace

BENCHMARK_MAIN();
