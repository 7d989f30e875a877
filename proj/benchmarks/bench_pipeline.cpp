// Microbenchmarks for the hot exact-arithmetic paths: partial-fraction
// products, the kernel expansion, the derivative tower, and the certified
// Hurwitz-zeta evaluation backing the numeric targets.

#include "padezeta/construction.hpp"
#include "padezeta/derivation.hpp"
#include "padezeta/euler_maclaurin.hpp"
#include "padezeta/partial_fraction.hpp"

#include <benchmark/benchmark.h>

using namespace padezeta;

namespace {

ProblemParams plain(long a, long r, long N, long n) {
    ProblemParams pp;
    pp.a = a;
    pp.r = r;
    pp.N = N;
    pp.n = n;
    pp.p = 1;
    pp.z0 = Z0Kind::One;
    pp.f.assign(static_cast<size_t>(N), CycScalar::one());
    pp.validate();
    return pp;
}

void bm_pf_multiply(benchmark::State& state) {
    const long n = state.range(0);
    const PartialFractionForm f = pf_f0(n, 1);
    const PartialFractionForm g = pf_g(1, n, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pf_multiply(f, g));
    }
}

void bm_kernel_expansion(benchmark::State& state) {
    const ProblemParams pp = plain(3, 1, 1, state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(expand_F(pp));
    }
}

void bm_derive_tower(benchmark::State& state) {
    const Construction c = build_construction(plain(3, 1, 1, state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(s_table(derive(c, -1)));
    }
}

void bm_hurwitz_zeta(benchmark::State& state) {
    const long prec = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hurwitz_zeta(3, make_rat(1, 3), prec));
    }
}

}  // namespace

BENCHMARK(bm_pf_multiply)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(bm_kernel_expansion)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(bm_derive_tower)->Arg(4)->Arg(8)->Arg(12);
BENCHMARK(bm_hurwitz_zeta)->Arg(128)->Arg(256)->Arg(512);

BENCHMARK_MAIN();
