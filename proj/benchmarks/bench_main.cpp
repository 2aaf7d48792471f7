#include <benchmark/benchmark.h>

#include <random>

#include "ntext/corpus.hpp"

using namespace ntx;

namespace {

void BM_Rref(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(1);
    const Mat m = random_matrix(PrimeField(2147483647), n, n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(rref(m));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Rref)->RangeMultiplier(2)->Range(16, 256)->Complexity(benchmark::oNCubed);

void BM_BuildExtension(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const RingData r = base_ring(BaseRing::dual2);
    const PhiSystem ps = canonical_phi_system(r, std::vector<Piece>(n, Piece::regular));
    for (auto _ : state) benchmark::DoNotOptimize(build_extension(r.ring, ps));
}
BENCHMARK(BM_BuildExtension)->DenseRange(1, 3);

// A random quotient of S^k over F_2[x]/(x^2) x|_n (R, ..., R).
void BM_IsProjective(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Instance inst = make_instance(BaseRing::dual2, std::vector<Piece>(n, Piece::regular));
    std::mt19937_64 rng(3);
    const FModule m = random_fmodule(inst.ext, rng, 2);
    for (auto _ : state) benchmark::DoNotOptimize(is_projective(inst.ext, m, 1'000'000));
    state.counters["dim"] = static_cast<double>(m.dim());
}
BENCHMARK(BM_IsProjective)->DenseRange(1, 3);

void BM_ProjDimension(benchmark::State& state) {
    const Instance inst = make_instance(BaseRing::dual2, {Piece::top, Piece::regular});
    const FModule m = Z(inst.ext, regular_module(inst.ext.base()));
    for (auto _ : state) benchmark::DoNotOptimize(proj_dimension(inst.ext, m, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_ProjDimension)->DenseRange(2, 4);

}  // namespace

BENCHMARK_MAIN();
