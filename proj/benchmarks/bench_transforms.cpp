#include <benchmark/benchmark.h>

#include "distfield/exact_edt.hpp"
#include "distfield/propagation.hpp"
#include "distfield/random_image.hpp"
#include "distfield/vector_dt.hpp"

using namespace distfield;

namespace {

BinaryImage workload(std::size_t side, double density = 0.02) {
    return generate_random_image(side, side, density, 0x5eed + side);
}

void BM_CityblockSequential(benchmark::State& state) {
    const auto img = workload(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(cityblock_sequential(img));
    state.SetItemsProcessed(state.iterations() * img.rows() * img.cols());
}

void BM_CityblockSeparable(benchmark::State& state) {
    const auto img = workload(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(cityblock_separable(img));
    state.SetItemsProcessed(state.iterations() * img.rows() * img.cols());
}

void BM_Chamfer34(benchmark::State& state) {
    const auto img = workload(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(chamfer34(img));
    state.SetItemsProcessed(state.iterations() * img.rows() * img.cols());
}

void BM_Danielsson(benchmark::State& state) {
    const auto img = workload(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(danielsson(img));
    state.SetItemsProcessed(state.iterations() * img.rows() * img.cols());
}

void BM_Edt(benchmark::State& state, EdtAlgorithm alg) {
    const auto img = workload(state.range(0));
    ScanStats stats;
    for (auto _ : state) benchmark::DoNotOptimize(edt(img, alg, Orientation::automatic, &stats));
    state.SetItemsProcessed(state.iterations() * img.rows() * img.cols());
    state.counters["candidates"] =
        benchmark::Counter(double(stats.candidates) / double(state.iterations()));
}

void BM_VoronoiLabels(benchmark::State& state) {
    const auto img = workload(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(voronoi_labels(img));
    state.SetItemsProcessed(state.iterations() * img.rows() * img.cols());
}

}  // namespace

BENCHMARK(BM_CityblockSequential)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(BM_CityblockSeparable)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(BM_Chamfer34)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(BM_Danielsson)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK_CAPTURE(BM_Edt, bruteforce, EdtAlgorithm::bruteforce)->Arg(64)->Arg(128);
BENCHMARK_CAPTURE(BM_Edt, simple, EdtAlgorithm::simple)->Arg(64)->Arg(256);
BENCHMARK_CAPTURE(BM_Edt, improved, EdtAlgorithm::improved)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK_CAPTURE(BM_Edt, envelope, EdtAlgorithm::envelope)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(BM_VoronoiLabels)->Arg(64)->Arg(256)->Arg(1024);

BENCHMARK_MAIN();
