#include "distfield/vector_dt.hpp"

#include <algorithm>

namespace distfield {

std::string to_text(const OffsetMap& om) {
    std::string out;
    for (std::size_t i = 0; i < om.rows(); ++i) {
        for (std::size_t j = 0; j < om.cols(); ++j) {
            if (j) out += ' ';
            const Offset& o = om(i, j);
            if (o.is_set())
                out += std::to_string(o.dy) + ',' + std::to_string(o.dx);
            else
                out += "inf";
        }
        out += '\n';
    }
    return out;
}

DistCache::DistCache(std::size_t side) : side_(side), table_(side * side, -1) {
    if (side == 0) throw std::invalid_argument("cache side must be positive");
}

std::uint64_t DistCache::operator()(std::uint32_t a, std::uint32_t b) {
    if (a >= side_ || b >= side_)
        throw std::out_of_range("offset beyond cache extent");
    auto& slot = table_[a * side_ + b];
    if (slot < 0) {
        const std::int64_t d = std::int64_t{a} * a + std::int64_t{b} * b;
        slot = d;
        table_[b * side_ + a] = d;
    }
    return static_cast<std::uint64_t>(slot);
}

namespace {

struct Sweeper {
    DistanceMap& dist;
    OffsetMap& offsets;
    DistCache cache;

    std::uint64_t squared(std::uint32_t a, std::uint32_t b) {
        if (a < cache.side() && b < cache.side()) return cache(a, b);
        return std::uint64_t{a} * a + std::uint64_t{b} * b;
    }

    // Candidate from (si,sj) with incremented components; strict improvement only.
    void update(std::size_t i, std::size_t j, std::size_t si, std::size_t sj,
                std::uint32_t add_y, std::uint32_t add_x) {
        const Offset src = offsets(si, sj);
        if (!src.is_set()) return;
        const std::uint32_t ny = src.dy + add_y;
        const std::uint32_t nx = src.dx + add_x;
        const std::uint64_t d = squared(ny, nx);
        if (dist(i, j) > d) {
            dist(i, j) = d;
            offsets(i, j) = {ny, nx};
        }
    }

    void sweep_down() {
        const std::size_t rows = dist.rows(), cols = dist.cols();
        for (std::size_t i = 1; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j)
                update(i, j, i - 1, j, 1, 0);
            for (std::size_t j = 1; j < cols; ++j) {
                update(i, j, i, j - 1, 0, 1);
                update(i, j, i - 1, j - 1, 1, 1);
            }
            for (std::size_t j = cols - 1; j-- > 0;) {
                update(i, j, i - 1, j + 1, 1, 1);
                update(i, j, i, j + 1, 0, 1);
            }
        }
    }

    void sweep_up() {
        const std::size_t rows = dist.rows(), cols = dist.cols();
        for (std::size_t i = rows - 1; i-- > 0;) {
            for (std::size_t j = 0; j < cols; ++j)
                update(i, j, i + 1, j, 1, 0);
            for (std::size_t j = 1; j < cols; ++j) {
                update(i, j, i, j - 1, 0, 1);
                update(i, j, i + 1, j - 1, 1, 1);
            }
            for (std::size_t j = cols - 1; j-- > 0;) {
                update(i, j, i, j + 1, 0, 1);
                update(i, j, i + 1, j + 1, 1, 1);
            }
        }
    }
};

VectorDtResult init_state(const BinaryImage& img) {
    VectorDtResult state{init_distance_map(img, DistanceKind::squared_euclidean),
                         OffsetMap(img.rows(), img.cols())};
    for (std::size_t i = 0; i < img.rows(); ++i)
        for (std::size_t j = 0; j < img.cols(); ++j)
            if (img.is_object(i, j)) state.offsets(i, j) = {0, 0};
    return state;
}

}  // namespace

VectorDtResult danielsson(const BinaryImage& img) {
    VectorDtResult state = init_state(img);
    Sweeper sweeper{state.distance, state.offsets,
                    DistCache(std::max(img.rows(), img.cols()))};
    sweeper.sweep_down();
    sweeper.sweep_up();
    return state;
}

VectorDtResult danielsson_first_sweep(const BinaryImage& img) {
    VectorDtResult state = init_state(img);
    Sweeper sweeper{state.distance, state.offsets,
                    DistCache(std::max(img.rows(), img.cols()))};
    sweeper.sweep_down();
    return state;
}

}  // namespace distfield
