#include "genusforge/surgery.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace genusforge;

const ManifoldData& hp2() {
    static const ManifoldData m =
        parse_manifold_file(std::string(GENUSFORGE_FIXTURE_DIR) + "/hp2.json");
    return m;
}

const ManifoldData& k3() {
    static const ManifoldData m =
        parse_manifold_file(std::string(GENUSFORGE_FIXTURE_DIR) + "/k3.json");
    return m;
}

void BM_CharacteristicSeries(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(characteristic_series(SeriesKind::L, order));
}
BENCHMARK(BM_CharacteristicSeries)->Arg(8)->Arg(16)->Arg(32);

void BM_SeriesDivision(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    const PowerSeries num = characteristic_series(SeriesKind::L, order);
    const PowerSeries den = characteristic_series(SeriesKind::Ahat, order);
    for (auto _ : state)
        benchmark::DoNotOptimize(num / den);
}
BENCHMARK(BM_SeriesDivision)->Arg(16)->Arg(64);

void BM_PartitionEnumeration(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(partitions_of(n));
}
BENCHMARK(BM_PartitionEnumeration)->Arg(20)->Arg(40);

void BM_GenusTableUncached(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(genus_polynomial_with_roots(SeriesKind::L, n, n));
}
BENCHMARK(BM_GenusTableUncached)->Arg(4)->Arg(6)->Arg(8)->Arg(10);

void BM_GenusOfManifold(benchmark::State& state) {
    genus_polynomial(SeriesKind::L, 2); // warm the table cache
    for (auto _ : state)
        benchmark::DoNotOptimize(genus_of_manifold(SeriesKind::L, hp2()));
}
BENCHMARK(BM_GenusOfManifold);

void BM_InverseTotalClass(benchmark::State& state) {
    const RingModel ring = RingModel::base(k3());
    CohomologyClass p = ring.unit();
    int salt = 1;
    for (const auto& e : k3().basis())
        if (e.degree > 0)
            p.add(e.id, Rational(BigInt(salt++), BigInt(3)));
    for (auto _ : state)
        benchmark::DoNotOptimize(ring.inverse_total_class(p));
}
BENCHMARK(BM_InverseTotalClass);

void BM_FindDualClass(benchmark::State& state) {
    const RingModel ring = RingModel::base(k3());
    const CohomologyClass c =
        CohomologyClass::single("e1") + Rational(2) * CohomologyClass::single("a1");
    for (auto _ : state)
        benchmark::DoNotOptimize(find_dual_class(ring, c));
}
BENCHMARK(BM_FindDualClass);

void BM_ConstructCertificate(benchmark::State& state) {
    genus_polynomial(SeriesKind::L, 3);
    genus_polynomial(SeriesKind::Ahat, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(build_certificate(ConstructionInput{hp2(), 4, 1}));
}
BENCHMARK(BM_ConstructCertificate);

} // namespace

BENCHMARK_MAIN();
