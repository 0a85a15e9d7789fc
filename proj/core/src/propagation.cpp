#include "distfield/propagation.hpp"

#include "distfield/parallel.hpp"

namespace distfield {

namespace {

// Neighbour relaxation; an infinite neighbour never contributes.
inline void relax(std::uint64_t& cell, std::uint64_t nbr, std::uint64_t weight) {
    if (!DistanceMap::is_infinite(nbr) && cell > nbr + weight) cell = nbr + weight;
}

}  // namespace

void cityblock_forward_pass(DistanceMap& dm) {
    const std::size_t rows = dm.rows(), cols = dm.cols();
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            if (i > 0) relax(dm(i, j), dm(i - 1, j), 1);
            if (j > 0) relax(dm(i, j), dm(i, j - 1), 1);
        }
    }
}

void cityblock_backward_pass(DistanceMap& dm) {
    const std::size_t rows = dm.rows(), cols = dm.cols();
    for (std::size_t i = rows; i-- > 0;) {
        for (std::size_t j = cols; j-- > 0;) {
            if (i + 1 < rows) relax(dm(i, j), dm(i + 1, j), 1);
            if (j + 1 < cols) relax(dm(i, j), dm(i, j + 1), 1);
        }
    }
}

void cityblock_vertical_passes(DistanceMap& dm, unsigned threads) {
    const std::size_t rows = dm.rows();
    parallel_for(dm.cols(), threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t j = begin; j < end; ++j) {
            for (std::size_t i = 1; i < rows; ++i)
                relax(dm(i, j), dm(i - 1, j), 1);
            for (std::size_t i = rows - 1; i-- > 0;)
                relax(dm(i, j), dm(i + 1, j), 1);
        }
    });
}

void cityblock_horizontal_passes(DistanceMap& dm, unsigned threads) {
    const std::size_t cols = dm.cols();
    parallel_for(dm.rows(), threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            for (std::size_t j = 1; j < cols; ++j)
                relax(dm(i, j), dm(i, j - 1), 1);
            for (std::size_t j = cols - 1; j-- > 0;)
                relax(dm(i, j), dm(i, j + 1), 1);
        }
    });
}

void chamfer_forward_pass(DistanceMap& dm) {
    const std::size_t rows = dm.rows(), cols = dm.cols();
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            auto& cell = dm(i, j);
            if (j > 0) relax(cell, dm(i, j - 1), 3);
            if (i > 0) {
                relax(cell, dm(i - 1, j), 3);
                if (j > 0) relax(cell, dm(i - 1, j - 1), 4);
                if (j + 1 < cols) relax(cell, dm(i - 1, j + 1), 4);
            }
        }
    }
}

void chamfer_backward_pass(DistanceMap& dm) {
    const std::size_t rows = dm.rows(), cols = dm.cols();
    for (std::size_t i = rows; i-- > 0;) {
        for (std::size_t j = cols; j-- > 0;) {
            auto& cell = dm(i, j);
            if (j + 1 < cols) relax(cell, dm(i, j + 1), 3);
            if (i + 1 < rows) {
                relax(cell, dm(i + 1, j), 3);
                if (j > 0) relax(cell, dm(i + 1, j - 1), 4);
                if (j + 1 < cols) relax(cell, dm(i + 1, j + 1), 4);
            }
        }
    }
}

DistanceMap cityblock_sequential(const BinaryImage& img) {
    DistanceMap dm = init_distance_map(img, DistanceKind::cityblock);
    cityblock_forward_pass(dm);
    cityblock_backward_pass(dm);
    return dm;
}

DistanceMap cityblock_separable(const BinaryImage& img, unsigned threads) {
    DistanceMap dm = init_distance_map(img, DistanceKind::cityblock);
    cityblock_vertical_passes(dm, threads);
    cityblock_horizontal_passes(dm, threads);
    return dm;
}

DistanceMap chamfer34(const BinaryImage& img) {
    DistanceMap dm = init_distance_map(img, DistanceKind::chamfer3);
    chamfer_forward_pass(dm);
    chamfer_backward_pass(dm);
    return dm;
}

Grid<double> chamfer_normalized(const DistanceMap& dm) {
    if (dm.kind() != DistanceKind::chamfer3)
        throw std::invalid_argument("chamfer_normalized requires a chamfer map");
    Grid<double> out(dm.rows(), dm.cols());
    for (std::size_t i = 0; i < dm.rows(); ++i) {
        for (std::size_t j = 0; j < dm.cols(); ++j) {
            const auto v = dm(i, j);
            if (DistanceMap::is_infinite(v)) {
                out(i, j) = std::numeric_limits<double>::infinity();
            } else {
                const double d = static_cast<double>(v) / 3.0;
                out(i, j) = d * d;
            }
        }
    }
    return out;
}

}  // namespace distfield
