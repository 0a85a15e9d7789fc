#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "distfield/grid.hpp"

namespace distfield {

// Relative position to the claimed nearest feature. Components are stored as
// magnitudes (they only ever grow during propagation), so the sign of the
// direction is not recoverable.
struct Offset {
    static constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

    std::uint32_t dy = kUnset;
    std::uint32_t dx = kUnset;

    bool is_set() const { return dy != kUnset; }
    friend bool operator==(const Offset&, const Offset&) = default;
};

class OffsetMap {
public:
    OffsetMap(std::size_t rows, std::size_t cols) : cells_(rows, cols, Offset{}) {}

    std::size_t rows() const { return cells_.rows(); }
    std::size_t cols() const { return cells_.cols(); }

    Offset& operator()(std::size_t i, std::size_t j) { return cells_(i, j); }
    const Offset& operator()(std::size_t i, std::size_t j) const { return cells_(i, j); }

    friend bool operator==(const OffsetMap&, const OffsetMap&) = default;

private:
    Grid<Offset> cells_;
};

// "dy,dx" per cell, "inf" where unset.
std::string to_text(const OffsetMap& om);

// Memoized a^2 + b^2 lookup, symmetric in its arguments; each pair is computed
// once and stored under both (a,b) and (b,a).
class DistCache {
public:
    explicit DistCache(std::size_t side);

    std::size_t side() const { return side_; }

    // Throws std::out_of_range when an argument reaches beyond the table.
    std::uint64_t operator()(std::uint32_t a, std::uint32_t b);

private:
    std::size_t side_;
    std::vector<std::int64_t> table_;  // -1 marks an unfilled slot
};

struct VectorDtResult {
    DistanceMap distance;  // kind = squared_euclidean
    OffsetMap offsets;
};

// Approximate euclidean transform propagating relative positions instead of
// distances: a downward sweep (vertical update, then in-row forward and
// backward passes) followed by the mirrored upward sweep. A cell is only
// overwritten when the candidate squared distance is strictly smaller, and the
// result is an upper bound of the exact squared distance that is wrong only in
// rare disrupted-region configurations.
VectorDtResult danielsson(const BinaryImage& img);

// Downward sweep only; row 0 keeps its initialization state.
VectorDtResult danielsson_first_sweep(const BinaryImage& img);

}  // namespace distfield
