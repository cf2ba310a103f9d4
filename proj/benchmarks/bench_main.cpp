#include <benchmark/benchmark.h>

#include "yforge/geom.hpp"
#include "yforge/shc.hpp"
#include "yforge/shuffle.hpp"
#include "yforge/walg.hpp"

using namespace yforge;

namespace {

void BM_ShuffleMulDeg11(benchmark::State& state) {
    ShElement a = e_gen(3), b = e_gen(2);
    for (auto _ : state) benchmark::DoNotOptimize(shuffle_mul(a, b));
}
BENCHMARK(BM_ShuffleMulDeg11);

void BM_ShuffleMulDeg12(benchmark::State& state) {
    ShElement a = e_gen(2);
    ShElement bc = shuffle_mul(e_gen(1), e_gen(0));
    for (auto _ : state) benchmark::DoNotOptimize(shuffle_mul(a, bc));
}
BENCHMARK(BM_ShuffleMulDeg12);

void BM_CheckY1(benchmark::State& state) {
    int i = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(check_y1(i, i));
}
BENCHMARK(BM_CheckY1)->Arg(1)->Arg(3);

void BM_PolyGcd(benchmark::State& state) {
    SymId x = sym("x");
    Poly f = (Poly::var(SYM_H1) + Poly::var(x)).pow(4) - Poly::var(SYM_H2, 2);
    Poly g = (Poly::var(SYM_H1) + Poly::var(x)).pow(2) + Poly::var(SYM_H2);
    Poly fg = f * g, gh = g * (f + Poly(Rat(1)));
    for (auto _ : state) benchmark::DoNotOptimize(poly_gcd(fg, gh));
}
BENCHMARK(BM_PolyGcd);

void BM_SeriesExpand(benchmark::State& state) {
    SymId z = sym("z"), mu = sym("mu");
    Scalar f = (Scalar::var(z) - Scalar::var(mu) + hbar(3)) / (Scalar::var(z) - Scalar::var(mu));
    for (auto _ : state) benchmark::DoNotOptimize(series_expand(f, z, 8));
}
BENCHMARK(BM_SeriesExpand);

void BM_NullFieldColumn(benchmark::State& state) {
    auto sp = make_space({{3}, {2}}, {Scalar(0), Scalar(0)});
    auto ws = build_w011(sp);
    FieldPtr X = null_field(ws);
    LevelBasis basis = LevelBasis::build(sp, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        // fresh operator each round so the column cache does not short-circuit
        TruncOp op = TruncOp::field_mode(sp, null_field(ws), 0);
        benchmark::DoNotOptimize(op.column(basis.states.back()));
    }
    (void)X;
}
BENCHMARK(BM_NullFieldColumn)->Arg(2)->Arg(3);

void BM_VertexBlock(benchmark::State& state) {
    auto sp = make_space({{3}, {3}}, {Scalar(0), Scalar(0)});
    auto currents = screening_set(0, 0, 2);
    VertexOp v(sp, currents[0].alpha);
    LevelBasis basis = LevelBasis::build(sp, 3);
    for (auto _ : state) {
        TruncOp s0 = v.block(-1);
        benchmark::DoNotOptimize(s0.column(basis.states.back()));
    }
}
BENCHMARK(BM_VertexBlock);

void BM_F01Column(benchmark::State& state) {
    ShcRep rep = fock_rep(3, Scalar::var(sym("mu")), 1);
    LevelBasis basis = LevelBasis::build(rep.space, 4);
    for (auto _ : state) {
        TruncOp op = f01_single(rep.space, 0, rep.mu[0]);
        benchmark::DoNotOptimize(op.column(basis.states.back()));
    }
}
BENCHMARK(BM_F01Column);

void BM_StabilityClosure(benchmark::State& state) {
    auto lib = critical_sample_library();
    for (auto _ : state)
        for (auto& rep : lib) benchmark::DoNotOptimize(stab_d(rep));
}
BENCHMARK(BM_StabilityClosure);

}  // namespace

BENCHMARK_MAIN();
