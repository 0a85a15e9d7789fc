#include "distfield/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace distfield {

BinaryImage BinaryImage::from_points(std::size_t rows, std::size_t cols,
                                     std::span<const GridPoint> points) {
    BinaryImage img(rows, cols);
    for (const auto& p : points) {
        if (p.row >= rows || p.col >= cols)
            throw std::out_of_range("point (" + std::to_string(p.row) + ", " +
                                    std::to_string(p.col) + ") outside " +
                                    std::to_string(rows) + "x" + std::to_string(cols) +
                                    " image");
        img.set_object(p.row, p.col);
    }
    return img;
}

std::size_t BinaryImage::object_count() const {
    std::size_t n = 0;
    for (auto c : cells_.cells()) n += (c != 0);
    return n;
}

std::vector<FeaturePoint> BinaryImage::feature_points() const {
    std::vector<FeaturePoint> out;
    std::uint32_t id = 0;
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols(); ++j)
            if (is_object(i, j)) out.push_back({i, j, id++});
    return out;
}

BinaryImage BinaryImage::inverted() const {
    BinaryImage out(rows(), cols());
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols(); ++j)
            out.set_object(i, j, !is_object(i, j));
    return out;
}

BinaryImage BinaryImage::transposed() const {
    BinaryImage out(cols(), rows());
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols(); ++j)
            out.set_object(j, i, is_object(i, j));
    return out;
}

std::uint64_t kind_bound(DistanceKind kind, std::size_t rows, std::size_t cols) {
    const std::uint64_t dr = rows - 1;
    const std::uint64_t dc = cols - 1;
    switch (kind) {
        case DistanceKind::cityblock: return dr + dc;
        case DistanceKind::chessboard: return std::max(dr, dc);
        case DistanceKind::chamfer3: return 4 * (dr + dc);
        case DistanceKind::squared_euclidean: return dr * dr + dc * dc;
    }
    throw std::invalid_argument("unknown distance kind");
}

bool DistanceMap::all_infinite() const {
    return std::ranges::all_of(values_.cells(), [](std::uint64_t v) { return is_infinite(v); });
}

std::optional<std::uint64_t> DistanceMap::max_finite() const {
    std::optional<std::uint64_t> best;
    for (auto v : values_.cells())
        if (!is_infinite(v) && (!best || v > *best)) best = v;
    return best;
}

DistanceMap DistanceMap::transposed() const {
    DistanceMap out(cols(), rows(), kind_);
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols(); ++j)
            out(j, i) = (*this)(i, j);
    return out;
}

DistanceMap init_distance_map(const BinaryImage& img, DistanceKind kind) {
    DistanceMap dm(img.rows(), img.cols(), kind);
    for (std::size_t i = 0; i < img.rows(); ++i)
        for (std::size_t j = 0; j < img.cols(); ++j)
            if (img.is_object(i, j)) dm(i, j) = 0;
    return dm;
}

GrayImage to_gray(const DistanceMap& dm, GrayMapping mode) {
    const auto max = dm.max_finite();
    if (!max) throw std::domain_error("no features: distance map has no finite value");
    GrayImage out(dm.rows(), dm.cols());
    if (*max == 0) return out;
    const double denom = (mode == GrayMapping::sqrt_linear)
                             ? std::sqrt(static_cast<double>(*max))
                             : static_cast<double>(*max);
    for (std::size_t i = 0; i < dm.rows(); ++i) {
        for (std::size_t j = 0; j < dm.cols(); ++j) {
            const double v = (mode == GrayMapping::sqrt_linear)
                                 ? std::sqrt(static_cast<double>(dm(i, j)))
                                 : static_cast<double>(dm(i, j));
            out(i, j) = static_cast<std::uint8_t>(std::lround(255.0 * v / denom));
        }
    }
    return out;
}

GrayImage labels_to_gray(const LabelMap& labels, std::size_t feature_count) {
    if (feature_count == 0) throw std::domain_error("no features: empty label map");
    GrayImage out(labels.rows(), labels.cols());
    for (std::size_t i = 0; i < labels.rows(); ++i)
        for (std::size_t j = 0; j < labels.cols(); ++j)
            out(i, j) = static_cast<std::uint8_t>(std::lround(
                255.0 * static_cast<double>(labels(i, j)) /
                static_cast<double>(feature_count)));
    return out;
}

std::string to_text(const DistanceMap& dm) {
    std::string out;
    for (std::size_t i = 0; i < dm.rows(); ++i) {
        for (std::size_t j = 0; j < dm.cols(); ++j) {
            if (j) out += ' ';
            const auto v = dm(i, j);
            out += DistanceMap::is_infinite(v) ? "inf" : std::to_string(v);
        }
        out += '\n';
    }
    return out;
}

std::string to_text_sqrt(const DistanceMap& dm) {
    std::string out;
    char buf[48];
    for (std::size_t i = 0; i < dm.rows(); ++i) {
        for (std::size_t j = 0; j < dm.cols(); ++j) {
            if (j) out += ' ';
            const auto v = dm(i, j);
            if (DistanceMap::is_infinite(v)) {
                out += "inf";
            } else {
                std::snprintf(buf, sizeof buf, "%.6g", std::sqrt(static_cast<double>(v)));
                out += buf;
            }
        }
        out += '\n';
    }
    return out;
}

std::string to_text(const Grid<double>& m) {
    std::string out;
    char buf[48];
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ' ';
            if (std::isinf(m(i, j))) {
                out += "inf";
                continue;
            }
            const double r = std::round(m(i, j) * 10.0) / 10.0;
            if (r == std::floor(r))
                out += std::to_string(static_cast<long long>(r));
            else {
                std::snprintf(buf, sizeof buf, "%.1f", r);
                out += buf;
            }
        }
        out += '\n';
    }
    return out;
}

std::string to_text(const LabelMap& labels) {
    std::string out;
    for (std::size_t i = 0; i < labels.rows(); ++i) {
        for (std::size_t j = 0; j < labels.cols(); ++j) {
            if (j) out += ' ';
            const auto v = labels(i, j);
            out += (v == LabelMap::kNoLabel) ? "inf" : std::to_string(v);
        }
        out += '\n';
    }
    return out;
}

}  // namespace distfield
