#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "distfield/grid.hpp"

namespace distfield {

// Work accounting for the pairwise approach: n_c = n_B * n_O distance
// computations, maximal when background and object pixels split evenly.
struct CostEstimate {
    std::uint64_t objects = 0;
    std::uint64_t background = 0;
    std::uint64_t computations = 0;
};

// Candidate-evaluation counter threaded through the scanners so benchmarks can
// report algorithm-internal work instead of wall time alone.
struct ScanStats {
    std::uint64_t candidates = 0;
};

struct BruteForceResult {
    DistanceMap map;
    CostEstimate cost;
};

// Per cell, min over all object pixels of (dr^2 + dc^2). Quadratic; kept as
// the ground-truth reference for every other scanner.
BruteForceResult brute_force_edt(const BinaryImage& img, unsigned threads = 1);

// Stage one of the separable transform: per column, min squared vertical
// offset to a feature in that column. The running value climbs through the
// odd numbers ((x+1)^2 - x^2 = 2x + 1), so no multiplication is needed.
void vertical_down_pass(DistanceMap& dm, unsigned threads = 1);
void vertical_up_pass(DistanceMap& dm, unsigned threads = 1);
DistanceMap vertical_pass(const BinaryImage& img, unsigned threads = 1);

// Stage two, three interchangeable row scanners over the vertical map.

// Scans every column k for every target column j: O(rows * cols^2).
DistanceMap row_scan_simple(const DistanceMap& vert, ScanStats* stats = nullptr,
                            unsigned threads = 1);

// Same output; skips featureless columns and stops each directional scan once
// the horizontal component alone reaches the current minimum.
DistanceMap row_scan_improved(const DistanceMap& vert, ScanStats* stats = nullptr,
                              unsigned threads = 1);

// One row of the lower envelope of the parabolas D_k(j) = vert(k) + (j-k)^2.
// ks holds the vertex columns of the contributing parabolas (the first entry
// is the column-0 base, which may own an empty segment); js holds half-open
// segment starts with js.front() == 0 and js.back() == cols, so parabola
// ks[t] provides the minimum on [js[t], js[t+1]).
struct EnvelopeState {
    std::vector<std::int64_t> ks;
    std::vector<std::int64_t> js;
};

// Boundary policy at a shared (exact integer) intersection column: take_new
// hands the tie column to the incoming parabola (larger vertex column);
// keep_old starts the new segment strictly after the intersection so the
// smaller vertex column keeps it. Distance output is identical either way.
enum class EnvelopeTie : std::uint8_t { take_new, keep_old };

// Builds the envelope for one row of vertical distances. `local_max` stands in
// for infinity and must exceed kind_bound(squared_euclidean, rows, cols).
// Intersection columns are exact integer ceiling/floor divisions.
EnvelopeState build_row_envelope(std::span<const std::int64_t> vert, std::int64_t local_max,
                                 EnvelopeTie tie, ScanStats* stats = nullptr);

// Envelope of one row of a vertical-pass map, take_new policy (the published
// bookkeeping form).
EnvelopeState meijster_row_envelope(const DistanceMap& vert, std::size_t row);

constexpr std::uint32_t kNoColumn = std::numeric_limits<std::uint32_t>::max();

struct MeijsterResult {
    DistanceMap map;
    Grid<std::uint32_t> nearest_col;  // envelope vertex column serving each cell
};

// Linear-time row scan via the lower envelope; equals row_scan_simple
// everywhere. O(rows * cols) in total.
MeijsterResult meijster_scan(const DistanceMap& vert, ScanStats* stats = nullptr,
                             unsigned threads = 1);

enum class EdtAlgorithm : std::uint8_t { bruteforce, simple, improved, envelope };

enum class Orientation : std::uint8_t {
    automatic,  // transpose for the quadratic scanners when rows < cols
    rows,       // scan along rows as given
    columns,    // transpose, scan, transpose back
};

// Exact squared euclidean transform with selectable row scanner. The result is
// identical across algorithms and orientations.
DistanceMap edt(const BinaryImage& img, EdtAlgorithm algorithm,
                Orientation orient = Orientation::automatic, ScanStats* stats = nullptr,
                unsigned threads = 1);

// Voronoi regions: per cell, the id of a feature achieving the exact squared
// distance. Ties at segment boundaries resolve to the smaller feature column;
// vertical ties within a column resolve to the upper feature.
LabelMap voronoi_labels(const BinaryImage& img, unsigned threads = 1);

}  // namespace distfield
