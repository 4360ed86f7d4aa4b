#include "legal/families.hpp"
#include <benchmark/benchmark.h>

using namespace legal;

static void BM_legality(benchmark::State& state) {
    auto fb = cell600();
    LegalityChecker chk(fb.g);
    Bitset s = *fb.start;
    for (auto _ : state) benchmark::DoNotOptimize(chk.is_legal(s));
}
BENCHMARK(BM_legality);

static void BM_strong_legality(benchmark::State& state) {
    auto fb = cell600();
    LegalityChecker chk(fb.g);
    Bitset s = *fb.start;
    for (auto _ : state) benchmark::DoNotOptimize(chk.is_strongly_legal(s));
}
BENCHMARK(BM_strong_legality);

static void BM_induced_connected(benchmark::State& state) {
    auto fb = icosahedron();
    LegalityChecker chk(fb.g);
    Bitset s = *fb.start;
    for (auto _ : state) benchmark::DoNotOptimize(chk.induced_connected(s));
}
BENCHMARK(BM_induced_connected);

static void BM_orbit_icosahedron(benchmark::State& state) {
    auto fb = icosahedron();
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_legal_orbit(fb.g, *fb.sys, *fb.start));
}
BENCHMARK(BM_orbit_icosahedron);

static void BM_orbit_cell24_threads(benchmark::State& state) {
    auto fb = cell24();
    OrbitOptions opts;
    opts.threads = (int)state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_legal_orbit(fb.g, *fb.sys, *fb.start, opts));
}
BENCHMARK(BM_orbit_cell24_threads)->Arg(1)->Arg(4);

BENCHMARK_MAIN();
