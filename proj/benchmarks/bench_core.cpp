#include <benchmark/benchmark.h>

#include "weyl/centralizer.hpp"
#include "weyl/expr.hpp"
#include "weyl/spectral.hpp"

using namespace weyl;

namespace {

PolyDiffOp quartic() { return parse_operator("(D^2 + x^4 + 1)^2 + 8*i*D + 16*x^2"); }

void bm_mpoly_mul(benchmark::State& state) {
    MPoly a = parse_poly("(x^3 + 2*lambda*x + 1)^4", {"x", "lambda"});
    MPoly b = parse_poly("(lambda^2 - 3*x^2 + i)^4", {"x", "lambda"});
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(bm_mpoly_mul);

void bm_op_compose(benchmark::State& state) {
    PolyDiffOp l = quartic();
    PolyDiffOp m = l * l;
    for (auto _ : state) benchmark::DoNotOptimize(l * m);
}
BENCHMARK(bm_op_compose);

void bm_det_fraction_free(benchmark::State& state) {
    PolyDiffOp l = parse_operator("D^2 + x^3 + 1");
    PolyDiffOp b = l * parse_operator("D") + parse_operator("x^2");
    SylvesterK s = build_sylvester(l - PolyDiffOp::constant(MPoly::variable("lambda")),
                                   b - PolyDiffOp::constant(MPoly::variable("mu")), 0);
    for (auto _ : state) benchmark::DoNotOptimize(det_fraction_free(s.mat));
}
BENCHMARK(bm_det_fraction_free);

void bm_spectral_curve_interp(benchmark::State& state) {
    PolyDiffOp h = parse_operator("D^2 + x^3 + 1");
    PolyDiffOp l = h * h + parse_operator("2*x");
    PolyDiffOp b = h * h * h + (parse_operator("x") * h + h * parse_operator("x"))
                                   .left_scaled(MPoly::constant(GaussRat(Rat(3, 2))));
    for (auto _ : state) benchmark::DoNotOptimize(spectral_curve(l, b));
}
BENCHMARK(bm_spectral_curve_interp);

void bm_centralizer_search_order10(benchmark::State& state) {
    PolyDiffOp l = quartic();
    for (auto _ : state) benchmark::DoNotOptimize(centralizer_search(l, 10));
}
BENCHMARK(bm_centralizer_search_order10);

} // namespace

BENCHMARK_MAIN();
