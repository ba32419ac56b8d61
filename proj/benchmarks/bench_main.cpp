// Micro and macro benchmarks for the exact kernels: Buchberger on the
// hyperpolygon relation ideal, rational polytope volumes, the chamber sweep,
// and the triangular basis change.
#include "hkq/cogen.hpp"
#include "hkq/core_geometry.hpp"
#include "hkq/polygon.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace hkq;

Arrangement fig2(const std::vector<Rational>& offsets) {
    Arrangement arr;
    arr.d = 2;
    arr.normals = {{1, 1}, {1, 0}, {-1, 0}, {0, -1}};
    arr.offsets = offsets;
    return arr;
}

PolygonSpec alpha11333() {
    return PolygonSpec{{Rational(1), Rational(1), Rational(3), Rational(3), Rational(3)}};
}

void BM_buchberger_hyperpolygon_kernel(benchmark::State& state) {
    auto spec = alpha11333();
    auto fam = validate_alpha(spec);
    RingPtr R = hp_ambient(5);
    std::vector<Poly<Rational>> gens = hp_quadratic_relations(R, 5);
    for (Subset S : fam.all_short) gens.push_back(hp_CS(R, fam, S));
    for (auto _ : state) {
        auto G = buchberger(gens, MonomialOrder::degrevlex());
        benchmark::DoNotOptimize(G);
    }
}
BENCHMARK(BM_buchberger_hyperpolygon_kernel);

void BM_colon_certificate_n5(benchmark::State& state) {
    auto spec = alpha11333();
    for (auto _ : state) {
        auto rep = verify_hp_colon(spec);
        benchmark::DoNotOptimize(rep.equal);
    }
}
BENCHMARK(BM_colon_certificate_n5);

void BM_volume_trapezoid(benchmark::State& state) {
    Arrangement arr = fig2({Rational(7), Rational(1), Rational(1), Rational(0)});
    Polyhedron P = delta_A(arr, 0);
    for (auto _ : state) {
        auto v = volume(P);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_volume_trapezoid);

void BM_extended_core_sweep(benchmark::State& state) {
    Arrangement arr;
    arr.d = 2;
    arr.normals = {{1, 0}, {0, 1}, {-1, -1}, {0, -1}, {0, 1}};
    arr.offsets = {Rational(0), Rational(0), Rational(2), Rational(1), Rational(1)};
    auto va = validate(arr);
    for (auto _ : state) {
        auto report = extended_core(va);
        benchmark::DoNotOptimize(report.fixed_components.size());
    }
}
BENCHMARK(BM_extended_core_sweep);

void BM_volume_polynomial_interpolation(benchmark::State& state) {
    auto va = validate(fig2({Rational(0), Rational(1), Rational(1), Rational(0)}));
    std::vector<Rational> r = va.arr.offsets;
    for (auto _ : state) {
        auto vp = volume_polynomial(va, 0, r, 1);
        benchmark::DoNotOptimize(vp.poly);
    }
}
BENCHMARK(BM_volume_polynomial_interpolation);

void BM_upsilon_n6(benchmark::State& state) {
    PolygonSpec spec{{Rational(1), Rational(2), Rational(4), Rational(8), Rational(16), Rational(32)}};
    for (auto _ : state) {
        auto rep = upsilon_check(spec);
        benchmark::DoNotOptimize(rep.unit_lower_triangular);
    }
}
BENCHMARK(BM_upsilon_n6);

}  // namespace

BENCHMARK_MAIN();
