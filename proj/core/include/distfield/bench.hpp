#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "distfield/exact_edt.hpp"

namespace distfield {

struct BenchConfig {
    std::vector<std::size_t> sizes;         // square grids, one per entry
    double density = 0.02;
    std::vector<EdtAlgorithm> algorithms;
    unsigned reps = 1;
    std::uint64_t seed = 1;
    unsigned threads = 1;
};

struct BenchRow {
    std::size_t cells = 0;
    std::string algorithm;
    std::size_t size = 0;
    unsigned rep = 0;
    std::uint64_t wall_ns = 0;
    std::uint64_t candidates = 0;
};

const char* algorithm_name(EdtAlgorithm a);
std::optional<EdtAlgorithm> parse_algorithm(std::string_view name);

// One row per (algorithm, size, rep); the workload image for a given
// (size, rep, seed) is deterministic, so candidate counts are reproducible.
std::vector<BenchRow> run_bench(const BenchConfig& config);

// Header: cells,algorithm,size,rep,wall_ns,candidates
std::string to_csv(const std::vector<BenchRow>& rows);

}  // namespace distfield
