#include "distfield/bench.hpp"

#include <chrono>

#include "distfield/random_image.hpp"

namespace distfield {

const char* algorithm_name(EdtAlgorithm a) {
    switch (a) {
        case EdtAlgorithm::bruteforce: return "bruteforce";
        case EdtAlgorithm::simple: return "simple";
        case EdtAlgorithm::improved: return "improved";
        case EdtAlgorithm::envelope: return "envelope";
    }
    return "unknown";
}

std::optional<EdtAlgorithm> parse_algorithm(std::string_view name) {
    if (name == "bruteforce") return EdtAlgorithm::bruteforce;
    if (name == "simple") return EdtAlgorithm::simple;
    if (name == "improved") return EdtAlgorithm::improved;
    if (name == "envelope") return EdtAlgorithm::envelope;
    return std::nullopt;
}

namespace {

std::uint64_t workload_seed(std::uint64_t seed, std::size_t size, unsigned rep) {
    // splitmix-style mix keeps workloads distinct per (size, rep)
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (size * 131 + rep + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchConfig& config) {
    std::vector<BenchRow> rows;
    for (const std::size_t size : config.sizes) {
        for (unsigned rep = 0; rep < config.reps; ++rep) {
            const BinaryImage img = generate_random_image(
                size, size, config.density, workload_seed(config.seed, size, rep));
            for (const EdtAlgorithm alg : config.algorithms) {
                ScanStats stats;
                const auto t0 = std::chrono::steady_clock::now();
                const DistanceMap dm =
                    edt(img, alg, Orientation::automatic, &stats, config.threads);
                const auto t1 = std::chrono::steady_clock::now();
                (void)dm;
                rows.push_back(BenchRow{
                    size * size, algorithm_name(alg), size, rep,
                    static_cast<std::uint64_t>(
                        std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count()),
                    stats.candidates});
            }
        }
    }
    return rows;
}

std::string to_csv(const std::vector<BenchRow>& rows) {
    std::string out = "cells,algorithm,size,rep,wall_ns,candidates\n";
    for (const auto& r : rows) {
        out += std::to_string(r.cells) + ',' + r.algorithm + ',' + std::to_string(r.size) + ',' +
               std::to_string(r.rep) + ',' + std::to_string(r.wall_ns) + ',' +
               std::to_string(r.candidates) + '\n';
    }
    return out;
}

}  // namespace distfield
