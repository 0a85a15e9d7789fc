#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace distfield {

// Row-major 2-D array. Every image/map type in the library wraps one of these.
template <typename T>
class Grid {
public:
    Grid() = default;

    Grid(std::size_t rows, std::size_t cols, T fill = T{})
        : rows_(rows), cols_(cols), cells_(rows * cols, fill) {
        if (rows == 0 || cols == 0)
            throw std::invalid_argument("grid dimensions must be at least 1x1");
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return cells_.size(); }

    T& operator()(std::size_t i, std::size_t j) { return cells_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }

    std::span<T> row(std::size_t i) { return {cells_.data() + i * cols_, cols_}; }
    std::span<const T> row(std::size_t i) const { return {cells_.data() + i * cols_, cols_}; }

    std::span<T> cells() { return cells_; }
    std::span<const T> cells() const { return cells_; }

    Grid transposed() const {
        Grid out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out(j, i) = (*this)(i, j);
        return out;
    }

    friend bool operator==(const Grid&, const Grid&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> cells_;
};

struct GridPoint {
    std::size_t row = 0;
    std::size_t col = 0;
    friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

// An object pixel together with its insertion ordinal (row-major enumeration).
struct FeaturePoint {
    std::size_t row = 0;
    std::size_t col = 0;
    std::uint32_t id = 0;
    friend bool operator==(const FeaturePoint&, const FeaturePoint&) = default;
};

// Binary grid; true cells are object (feature) pixels. Transforms always
// measure background-to-nearest-object; invert first for inside-object maps.
class BinaryImage {
public:
    BinaryImage(std::size_t rows, std::size_t cols) : cells_(rows, cols, std::uint8_t{0}) {}

    // Places one object pixel per listed point; duplicates collapse.
    static BinaryImage from_points(std::size_t rows, std::size_t cols,
                                   std::span<const GridPoint> points);

    std::size_t rows() const { return cells_.rows(); }
    std::size_t cols() const { return cells_.cols(); }

    bool is_object(std::size_t i, std::size_t j) const { return cells_(i, j) != 0; }
    void set_object(std::size_t i, std::size_t j, bool object = true) {
        cells_(i, j) = object ? 1 : 0;
    }

    std::size_t object_count() const;
    std::vector<FeaturePoint> feature_points() const;

    BinaryImage inverted() const;
    BinaryImage transposed() const;

    friend bool operator==(const BinaryImage&, const BinaryImage&) = default;

private:
    Grid<std::uint8_t> cells_;
};

enum class DistanceKind : std::uint8_t {
    cityblock,
    chessboard,
    chamfer3,           // chamfer 3-4 values, i.e. distances scaled by 3
    squared_euclidean,
};

// Largest value a transform of the given kind can produce on a rows x cols grid.
std::uint64_t kind_bound(DistanceKind kind, std::size_t rows, std::size_t cols);

// Nonnegative integer distances with a dedicated infinity marker. The marker
// only survives into final results when the image has no object pixel at all.
class DistanceMap {
public:
    static constexpr std::uint64_t kInfinity = std::numeric_limits<std::uint64_t>::max();
    static bool is_infinite(std::uint64_t v) { return v == kInfinity; }

    DistanceMap(std::size_t rows, std::size_t cols, DistanceKind kind)
        : values_(rows, cols, kInfinity), kind_(kind) {}

    DistanceKind kind() const { return kind_; }
    std::size_t rows() const { return values_.rows(); }
    std::size_t cols() const { return values_.cols(); }

    std::uint64_t& operator()(std::size_t i, std::size_t j) { return values_(i, j); }
    std::uint64_t operator()(std::size_t i, std::size_t j) const { return values_(i, j); }

    std::span<std::uint64_t> row(std::size_t i) { return values_.row(i); }
    std::span<const std::uint64_t> row(std::size_t i) const { return values_.row(i); }

    const Grid<std::uint64_t>& values() const { return values_; }

    bool all_infinite() const;
    std::optional<std::uint64_t> max_finite() const;

    DistanceMap transposed() const;

    friend bool operator==(const DistanceMap&, const DistanceMap&) = default;

private:
    Grid<std::uint64_t> values_;
    DistanceKind kind_;
};

// Zero at object pixels, infinity everywhere else.
DistanceMap init_distance_map(const BinaryImage& img, DistanceKind kind);

class GrayImage {
public:
    GrayImage(std::size_t rows, std::size_t cols) : values_(rows, cols, std::uint8_t{0}) {}

    std::size_t rows() const { return values_.rows(); }
    std::size_t cols() const { return values_.cols(); }

    std::uint8_t& operator()(std::size_t i, std::size_t j) { return values_(i, j); }
    std::uint8_t operator()(std::size_t i, std::size_t j) const { return values_(i, j); }

    friend bool operator==(const GrayImage&, const GrayImage&) = default;

private:
    Grid<std::uint8_t> values_;
};

enum class GrayMapping : std::uint8_t {
    linear,       // round(255 * v / max)
    sqrt_linear,  // round(255 * sqrt(v) / sqrt(max)); suits squared-euclidean maps
};

// Monotone rescale of a distance map to [0, 255]. Throws if the map holds no
// finite value.
GrayImage to_gray(const DistanceMap& dm, GrayMapping mode);

// Voronoi region identifiers; value = FeaturePoint id of the nearest feature.
class LabelMap {
public:
    static constexpr std::uint32_t kNoLabel = std::numeric_limits<std::uint32_t>::max();

    LabelMap(std::size_t rows, std::size_t cols) : labels_(rows, cols, kNoLabel) {}

    std::size_t rows() const { return labels_.rows(); }
    std::size_t cols() const { return labels_.cols(); }

    std::uint32_t& operator()(std::size_t i, std::size_t j) { return labels_(i, j); }
    std::uint32_t operator()(std::size_t i, std::size_t j) const { return labels_(i, j); }

    friend bool operator==(const LabelMap&, const LabelMap&) = default;

private:
    Grid<std::uint32_t> labels_;
};

// Renders label ids as distinct gray levels: round(id * 255 / n_features).
GrayImage labels_to_gray(const LabelMap& labels, std::size_t feature_count);

// ---- plain-text matrix dumps -----------------------------------------------
// Rows of space-separated decimal values, "inf" for the infinity marker,
// each row newline-terminated.

std::string to_text(const DistanceMap& dm);
std::string to_text_sqrt(const DistanceMap& dm);       // sqrt(v), 6 significant digits
std::string to_text(const Grid<double>& m);            // 1-decimal, integral values bare
std::string to_text(const LabelMap& labels);

}  // namespace distfield
