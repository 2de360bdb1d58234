#include <benchmark/benchmark.h>

#include <random>

#include "cohiggs/catalog.hpp"

using namespace cohiggs;

namespace {

ToricSheaf tangentOf(const char* id) {
    return tangentSheaf(makeSurface(SurfaceId::parse(id)));
}

void BM_RrefRandom(benchmark::State& state) {
    std::mt19937_64 gen(7);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
    const std::size_t n = state.range(0);
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = Rat(Int(num(gen)), Int(den(gen)));
    for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_RrefRandom)->Arg(8)->Arg(16)->Arg(32);

void BM_LatticePoints(benchmark::State& state) {
    Fan p2 = makeSurface(SurfaceId::parse("P2"));
    HalfSpaceRegion region(2);
    for (const auto& rho : p2.rays()) region.add(rho, -state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(region.latticePoints());
}
BENCHMARK(BM_LatticePoints)->Arg(2)->Arg(10)->Arg(30);

void BM_PreHiggsOrigin(benchmark::State& state) {
    ToricSheaf t = tangentOf("P2'''");
    LatticeVec origin{Int(0), Int(0)};
    for (auto _ : state) benchmark::DoNotOptimize(preHiggsSpace(t, origin));
}
BENCHMARK(BM_PreHiggsOrigin);

void BM_RangeP2(benchmark::State& state) {
    ToricSheaf t = tangentOf("P2");
    for (auto _ : state) benchmark::DoNotOptimize(higgsRange(t, true));
}
BENCHMARK(BM_RangeP2);

void BM_RangeH4(benchmark::State& state) {
    ToricSheaf t = tangentOf("Hirz:4");
    for (auto _ : state) benchmark::DoNotOptimize(higgsRange(t, true));
}
BENCHMARK(BM_RangeH4);

void BM_SystemP2(benchmark::State& state) {
    ToricSheaf t = tangentOf("P2");
    for (auto _ : state) benchmark::DoNotOptimize(generateIntegrabilitySystem(t, true));
}
BENCHMARK(BM_SystemP2);

void BM_SectionTotal(benchmark::State& state) {
    ToricSheaf td = tensorLineBundle(tangentOf("P2"), {Int(state.range(0)), Int(0), Int(0)});
    for (auto _ : state) {
        std::size_t total = 0;
        for (const auto& r : sectionDegreeCandidates(td)) total += sectionSpace(td, r).dim();
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_SectionTotal)->Arg(3)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
