#include <benchmark/benchmark.h>

#include "idealclose/ideal.hpp"

using namespace idealclose;

static void BM_reduced_gb(benchmark::State& state) {
    auto R = make_poly_ring(0, {"x", "y", "z"});
    for (auto _ : state) {
        Ideal I = ideal_from_strings(R, {"x^2 + y*z - 2", "y^2 - x*z + 1", "z^2 - x*y - 3"});
        benchmark::DoNotOptimize(I.reduced_groebner_basis());
    }
}
BENCHMARK(BM_reduced_gb);

static void BM_intersection(benchmark::State& state) {
    auto R = make_poly_ring(0, {"x", "y"});
    Ideal a = ideal_from_strings(R, {"x^3", "x*y^2"});
    Ideal b = ideal_from_strings(R, {"y^3", "x^2*y"});
    for (auto _ : state) {
        benchmark::DoNotOptimize(ideal_intersection(a, b).reduced_groebner_basis());
    }
}
BENCHMARK(BM_intersection);

static void BM_saturation(benchmark::State& state) {
    auto R = make_poly_ring(0, {"x", "y"});
    Ideal a = ideal_from_strings(R, {"x^4*y", "x^2*y^3"});
    Ideal b = ideal_from_strings(R, {"x"});
    for (auto _ : state) {
        benchmark::DoNotOptimize(ideal_saturation(a, b).reduced_groebner_basis());
    }
}
BENCHMARK(BM_saturation);

BENCHMARK_MAIN();
