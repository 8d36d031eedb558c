#include <benchmark/benchmark.h>

#include "hopfore/analysis.hpp"
#include "hopfore/oracle.hpp"

using namespace hopfore;

namespace {

HopfPtr bench_instance() {
    FieldPtr F = Field::prime(17);
    GroupPtr G = AbelianGroup::make({16});
    Character chi = make_character(G, F, {F->from_int(2)});
    return make_hopf(F, G, chi, group_element(G, {1}), zero_cocycle(G, F), quotient_none());
}

void BM_qbinomial(benchmark::State& state) {
    FieldPtr F = Field::prime(17);
    Scalar q = F->from_int(3);
    unsigned n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(q_binomial(*F, n, n / 2, q));
}
BENCHMARK(BM_qbinomial)->Arg(8)->Arg(16)->Arg(32);

void BM_poly_factor(benchmark::State& state) {
    FieldPtr F = Field::prime(17);
    UniPoly f = poly_parse(*F, "(y^2+1)*(y^2+y+4)^2*(y-3)*y^3");
    for (auto _ : state) benchmark::DoNotOptimize(poly_factor(*F, f, 1));
}
BENCHMARK(BM_poly_factor);

void BM_comul_power(benchmark::State& state) {
    HopfPtr H = bench_instance();
    HopfElement xn = he_pow(*H, he_x(*H), static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(he_comul(*H, xn));
}
BENCHMARK(BM_comul_power)->Arg(4)->Arg(8)->Arg(12);

void BM_skew_primitive_scan(benchmark::State& state) {
    HopfPtr H = bench_instance();
    for (auto _ : state)
        benchmark::DoNotOptimize(
            skew_primitive_space(H, H->a, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_skew_primitive_scan)->Arg(8)->Arg(16);

void BM_classify_tensor(benchmark::State& state) {
    HopfPtr H = bench_instance();
    const Field& F = *H->field;
    Character sigma = make_character(H->group, H->field, {F.from_int(3)});
    Character lambda = make_character(H->group, H->field, {F.from_int(5)});
    WeightModule t = mod_tensor(make_block(H, sigma, poly_linear(F, F.from_int(2)), 1),
                                make_block(H, lambda, poly_linear(F, F.from_int(4)), 1));
    for (auto _ : state) benchmark::DoNotOptimize(classify(t, 1));
}
BENCHMARK(BM_classify_tensor);

void BM_oracle_split_tensor(benchmark::State& state) {
    HopfPtr H = bench_instance();
    const Field& F = *H->field;
    Character sigma = make_character(H->group, H->field, {F.from_int(3)});
    Character lambda = make_character(H->group, H->field, {F.from_int(5)});
    WeightModule t = mod_tensor(make_block(H, sigma, poly_linear(F, F.from_int(2)), 1),
                                make_block(H, lambda, poly_linear(F, F.from_int(4)), 1));
    for (auto _ : state) benchmark::DoNotOptimize(oracle_split(t, 1));
}
BENCHMARK(BM_oracle_split_tensor);

}  // namespace

BENCHMARK_MAIN();
