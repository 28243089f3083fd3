#include <benchmark/benchmark.h>

#include "idealclose/closures.hpp"
#include "idealclose/lab.hpp"
#include "idealclose/session.hpp"

using namespace idealclose;

namespace {

RingPtr square_zero() {
    return make_quotient_ring(make_poly_ring(2, {"x", "y"}),
                              std::vector<std::string>{"x^2", "x*y", "y^2"});
}

}  // namespace

static void BM_lattice_enumeration(benchmark::State& state) {
    auto R = make_quotient_ring(make_poly_ring(2, {"x", "y"}),
                                std::vector<std::string>{"x^2", "y^2"});
    for (auto _ : state) {
        FiniteRing F = FiniteRing::build(R);
        benchmark::DoNotOptimize(lattice_family(F));
    }
}
BENCHMARK(BM_lattice_enumeration);

static void BM_frobenius_closure(benchmark::State& state) {
    auto R = square_zero();
    FiniteRing F = FiniteRing::build(R);
    ClosureOperation frob = frobenius_closure(F);
    Ideal m = ideal_from_strings(R, {"x", "y"});
    for (auto _ : state) {
        benchmark::DoNotOptimize(frob.closure(m));
    }
}
BENCHMARK(BM_frobenius_closure);

static void BM_exhaustive_check(benchmark::State& state) {
    auto R = make_quotient_ring(make_poly_ring(2, {"x"}), std::vector<std::string>{"x^3"});
    FiniteRing F = FiniteRing::build(R);
    ClosureOperation frob = frobenius_closure(F);
    for (auto _ : state) {
        benchmark::DoNotOptimize(exhaustive_check(F, frob));
    }
}
BENCHMARK(BM_exhaustive_check);

static void BM_integral_membership(benchmark::State& state) {
    auto R = make_poly_ring(0, {"x", "y", "z"});
    Ideal I = ideal_from_strings(R, {"x^4", "y^4", "z^4", "x*y*z"});
    Polynomial f = parse_polynomial(R, "x^2*y^2*z^2");
    ClosureOperation ic = integral_closure_op();
    for (auto _ : state) {
        benchmark::DoNotOptimize(ic.membership(I, f));
    }
}
BENCHMARK(BM_integral_membership);

static void BM_session_round_trip(benchmark::State& state) {
    const std::string text =
        "ring R = poly(F2; x, y | x^2, x*y, y^2)\n"
        "ideal m = (x, y) in R\n"
        "closure f = frob\n"
        "check axioms f on lattice(R)\n"
        "compute f(m)\n";
    for (auto _ : state) {
        SessionResult res = run_session(parse_session(text));
        benchmark::DoNotOptimize(res.ok);
    }
}
BENCHMARK(BM_session_round_trip);
