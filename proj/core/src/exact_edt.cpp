#include "distfield/exact_edt.hpp"

#include <atomic>

#include "distfield/parallel.hpp"

namespace distfield {

namespace {

// Finite stand-in for infinity inside scanner scratch space; one above the
// largest real value so write-back can recognize sentinel-derived results.
std::int64_t local_max(std::size_t rows, std::size_t cols) {
    return static_cast<std::int64_t>(kind_bound(DistanceKind::squared_euclidean, rows, cols)) + 1;
}

std::int64_t ceil_div(std::int64_t num, std::int64_t den) {
    std::int64_t q = num / den;
    if (num % den > 0) ++q;  // den is always positive here
    return q;
}

std::int64_t floor_div(std::int64_t num, std::int64_t den) {
    std::int64_t q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

void load_row(const DistanceMap& vert, std::size_t i, std::int64_t lmax,
              std::vector<std::int64_t>& buf) {
    const auto row = vert.row(i);
    buf.resize(row.size());
    for (std::size_t j = 0; j < row.size(); ++j)
        buf[j] = DistanceMap::is_infinite(row[j]) ? lmax : static_cast<std::int64_t>(row[j]);
}

// Values at or above the local maximum come from sentinel vertices.
void store_value(DistanceMap& out, std::size_t i, std::size_t j, std::int64_t v,
                 std::int64_t lmax) {
    out(i, j) = v >= lmax ? DistanceMap::kInfinity : static_cast<std::uint64_t>(v);
}

}  // namespace

BruteForceResult brute_force_edt(const BinaryImage& img, unsigned threads) {
    const auto features = img.feature_points();
    BruteForceResult result{DistanceMap(img.rows(), img.cols(), DistanceKind::squared_euclidean),
                            CostEstimate{}};
    result.cost.objects = features.size();
    result.cost.background = img.rows() * img.cols() - features.size();
    result.cost.computations = result.cost.background * result.cost.objects;

    parallel_for(img.rows(), threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            for (std::size_t j = 0; j < img.cols(); ++j) {
                if (img.is_object(i, j)) {
                    result.map(i, j) = 0;
                    continue;
                }
                std::uint64_t best = DistanceMap::kInfinity;
                for (const auto& f : features) {
                    const std::uint64_t dr = i > f.row ? i - f.row : f.row - i;
                    const std::uint64_t dc = j > f.col ? j - f.col : f.col - j;
                    const std::uint64_t d = dr * dr + dc * dc;
                    if (d < best) best = d;
                }
                result.map(i, j) = best;
            }
        }
    });
    return result;
}

void vertical_down_pass(DistanceMap& dm, unsigned threads) {
    const std::size_t rows = dm.rows();
    parallel_for(dm.cols(), threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t j = begin; j < end; ++j) {
            std::uint64_t step = 1;
            for (std::size_t i = 1; i < rows; ++i) {
                const auto above = dm(i - 1, j);
                if (!DistanceMap::is_infinite(above) &&
                    (DistanceMap::is_infinite(dm(i, j)) || dm(i, j) > above + step)) {
                    dm(i, j) = above + step;
                    step += 2;
                } else {
                    step = 1;
                }
            }
        }
    });
}

void vertical_up_pass(DistanceMap& dm, unsigned threads) {
    const std::size_t rows = dm.rows();
    parallel_for(dm.cols(), threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t j = begin; j < end; ++j) {
            std::uint64_t step = 1;
            for (std::size_t i = rows - 1; i-- > 0;) {
                const auto below = dm(i + 1, j);
                if (!DistanceMap::is_infinite(below) &&
                    (DistanceMap::is_infinite(dm(i, j)) || dm(i, j) > below + step)) {
                    dm(i, j) = below + step;
                    step += 2;
                } else {
                    step = 1;
                }
            }
        }
    });
}

DistanceMap vertical_pass(const BinaryImage& img, unsigned threads) {
    DistanceMap dm = init_distance_map(img, DistanceKind::squared_euclidean);
    vertical_down_pass(dm, threads);
    vertical_up_pass(dm, threads);
    return dm;
}

DistanceMap row_scan_simple(const DistanceMap& vert, ScanStats* stats, unsigned threads) {
    const std::size_t rows = vert.rows(), cols = vert.cols();
    const std::int64_t lmax = local_max(rows, cols);
    DistanceMap out(rows, cols, DistanceKind::squared_euclidean);
    std::atomic<std::uint64_t> candidates{0};

    parallel_for(rows, threads, [&](std::size_t begin, std::size_t end) {
        std::vector<std::int64_t> buf;
        std::uint64_t local = 0;
        for (std::size_t i = begin; i < end; ++i) {
            load_row(vert, i, lmax, buf);
            for (std::size_t j = 0; j < cols; ++j) {
                std::int64_t best = buf[j];
                for (std::size_t k = 0; k < cols; ++k) {
                    const std::int64_t dc = static_cast<std::int64_t>(k) -
                                            static_cast<std::int64_t>(j);
                    const std::int64_t d = buf[k] + dc * dc;
                    ++local;
                    if (d < best) best = d;
                }
                store_value(out, i, j, best, lmax);
            }
        }
        candidates += local;
    });
    if (stats) stats->candidates += candidates.load();
    return out;
}

DistanceMap row_scan_improved(const DistanceMap& vert, ScanStats* stats, unsigned threads) {
    const std::size_t rows = vert.rows(), cols = vert.cols();
    const std::int64_t lmax = local_max(rows, cols);
    DistanceMap out(rows, cols, DistanceKind::squared_euclidean);
    std::atomic<std::uint64_t> candidates{0};

    parallel_for(rows, threads, [&](std::size_t begin, std::size_t end) {
        std::vector<std::int64_t> buf;
        std::uint64_t local = 0;
        for (std::size_t i = begin; i < end; ++i) {
            load_row(vert, i, lmax, buf);
            for (std::size_t j = 0; j < cols; ++j) {
                std::int64_t best = buf[j];
                // forward: once the horizontal component alone reaches the
                // minimum, no farther column can improve it
                for (std::size_t k = j + 1; k < cols; ++k) {
                    if (buf[k] >= lmax) continue;
                    const std::int64_t dc = static_cast<std::int64_t>(k - j);
                    const std::int64_t hor = dc * dc;
                    if (hor >= best) break;
                    ++local;
                    const std::int64_t d = buf[k] + hor;
                    if (d < best) best = d;
                }
                for (std::size_t k = j; k-- > 0;) {
                    if (buf[k] >= lmax) continue;
                    const std::int64_t dc = static_cast<std::int64_t>(j - k);
                    const std::int64_t hor = dc * dc;
                    if (hor >= best) break;
                    ++local;
                    const std::int64_t d = buf[k] + hor;
                    if (d < best) best = d;
                }
                store_value(out, i, j, best, lmax);
            }
        }
        candidates += local;
    });
    if (stats) stats->candidates += candidates.load();
    return out;
}

EnvelopeState build_row_envelope(std::span<const std::int64_t> vert, std::int64_t lmax,
                                 EnvelopeTie tie, ScanStats* stats) {
    const auto cols = static_cast<std::int64_t>(vert.size());
    EnvelopeState env;
    env.ks.assign(static_cast<std::size_t>(cols) + 1, 0);
    env.js.assign(static_cast<std::size_t>(cols) + 2, 0);

    // Column where parabola m starts to beat parabola k (k < m). A sentinel
    // vertex never beats a real one, so the intersection degenerates far left.
    std::uint64_t evaluations = 0;
    const auto boundary = [&](std::int64_t k, std::int64_t m) {
        ++evaluations;
        const std::int64_t num = vert[static_cast<std::size_t>(m)] -
                                 vert[static_cast<std::size_t>(k)] - k * k + m * m;
        const std::int64_t den = 2 * (m - k);
        return tie == EnvelopeTie::take_new ? ceil_div(num, den) : floor_div(num, den) + 1;
    };

    std::int64_t idx = 0;
    env.js[0] = -lmax;
    env.ks[0] = 0;
    for (std::int64_t m = 1; m < cols; ++m) {
        if (vert[static_cast<std::size_t>(m)] >= lmax) continue;
        std::int64_t start = boundary(env.ks[static_cast<std::size_t>(idx)], m);
        while (start <= env.js[static_cast<std::size_t>(idx)]) {
            --idx;
            start = boundary(env.ks[static_cast<std::size_t>(idx)], m);
        }
        if (start <= cols - 1) {
            ++idx;
            env.js[static_cast<std::size_t>(idx)] = std::max<std::int64_t>(0, start);
            env.ks[static_cast<std::size_t>(idx)] = m;
        }
    }
    env.js[0] = 0;
    env.js[static_cast<std::size_t>(idx) + 1] = cols;
    env.ks.resize(static_cast<std::size_t>(idx) + 1);
    env.js.resize(static_cast<std::size_t>(idx) + 2);
    if (stats) stats->candidates += evaluations;
    return env;
}

EnvelopeState meijster_row_envelope(const DistanceMap& vert, std::size_t row) {
    const std::int64_t lmax = local_max(vert.rows(), vert.cols());
    std::vector<std::int64_t> buf;
    load_row(vert, row, lmax, buf);
    return build_row_envelope(buf, lmax, EnvelopeTie::take_new);
}

namespace {

// Shared by meijster_scan and the label assembly.
template <typename Visit>
void envelope_rows(const DistanceMap& vert, EnvelopeTie tie, ScanStats* stats, unsigned threads,
                   Visit&& visit) {
    const std::size_t rows = vert.rows(), cols = vert.cols();
    const std::int64_t lmax = local_max(rows, cols);
    std::atomic<std::uint64_t> candidates{0};

    parallel_for(rows, threads, [&](std::size_t begin, std::size_t end) {
        std::vector<std::int64_t> buf;
        ScanStats local;
        for (std::size_t i = begin; i < end; ++i) {
            load_row(vert, i, lmax, buf);
            const EnvelopeState env = build_row_envelope(buf, lmax, tie, &local);
            for (std::size_t t = 0; t + 1 < env.js.size(); ++t) {
                const std::int64_t k = env.ks[t];
                const std::int64_t vk = buf[static_cast<std::size_t>(k)];
                for (std::int64_t j = env.js[t]; j < env.js[t + 1]; ++j) {
                    const std::int64_t d = vk + (j - k) * (j - k);
                    ++local.candidates;
                    visit(i, static_cast<std::size_t>(j), k, d, vk >= lmax, lmax);
                }
            }
        }
        candidates += local.candidates;
    });
    if (stats) stats->candidates += candidates.load();
}

}  // namespace

MeijsterResult meijster_scan(const DistanceMap& vert, ScanStats* stats, unsigned threads) {
    MeijsterResult result{DistanceMap(vert.rows(), vert.cols(), DistanceKind::squared_euclidean),
                          Grid<std::uint32_t>(vert.rows(), vert.cols(), kNoColumn)};
    envelope_rows(vert, EnvelopeTie::take_new, stats, threads,
                  [&](std::size_t i, std::size_t j, std::int64_t k, std::int64_t d,
                      bool sentinel_vertex, std::int64_t lmax) {
                      store_value(result.map, i, j, d, lmax);
                      result.nearest_col(i, j) =
                          sentinel_vertex ? kNoColumn : static_cast<std::uint32_t>(k);
                  });
    return result;
}

DistanceMap edt(const BinaryImage& img, EdtAlgorithm algorithm, Orientation orient,
                ScanStats* stats, unsigned threads) {
    if (algorithm == EdtAlgorithm::bruteforce) {
        auto result = brute_force_edt(img, threads);
        if (stats) stats->candidates += result.cost.computations;
        return std::move(result.map);
    }

    bool transpose = false;
    if (orient == Orientation::columns) {
        transpose = true;
    } else if (orient == Orientation::automatic && algorithm != EdtAlgorithm::envelope) {
        // O(rows * cols^2) scanners: scan the long axis vertically instead
        transpose = img.rows() < img.cols();
    }

    const BinaryImage* input = &img;
    BinaryImage flipped(1, 1);
    if (transpose) {
        flipped = img.transposed();
        input = &flipped;
    }

    const DistanceMap vert = vertical_pass(*input, threads);
    DistanceMap result(1, 1, DistanceKind::squared_euclidean);
    switch (algorithm) {
        case EdtAlgorithm::simple: result = row_scan_simple(vert, stats, threads); break;
        case EdtAlgorithm::improved: result = row_scan_improved(vert, stats, threads); break;
        case EdtAlgorithm::envelope: result = meijster_scan(vert, stats, threads).map; break;
        case EdtAlgorithm::bruteforce: break;  // handled above
    }
    return transpose ? result.transposed() : result;
}

LabelMap voronoi_labels(const BinaryImage& img, unsigned threads) {
    const auto features = img.feature_points();
    if (features.empty()) throw std::domain_error("no features: voronoi labels undefined");

    const std::size_t rows = img.rows(), cols = img.cols();
    Grid<std::uint32_t> id_at(rows, cols, LabelMap::kNoLabel);
    for (const auto& f : features) id_at(f.row, f.col) = f.id;

    // Vertical pass carrying the source row alongside the squared distance;
    // strict improvement keeps the down-pass (upper) feature on a tie.
    DistanceMap vert = init_distance_map(img, DistanceKind::squared_euclidean);
    Grid<std::uint32_t> src_row(rows, cols, kNoColumn);
    parallel_for(cols, threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t j = begin; j < end; ++j) {
            for (std::size_t i = 0; i < rows; ++i)
                if (img.is_object(i, j)) src_row(i, j) = static_cast<std::uint32_t>(i);
            std::uint64_t step = 1;
            for (std::size_t i = 1; i < rows; ++i) {
                const auto above = vert(i - 1, j);
                if (!DistanceMap::is_infinite(above) &&
                    (DistanceMap::is_infinite(vert(i, j)) || vert(i, j) > above + step)) {
                    vert(i, j) = above + step;
                    src_row(i, j) = src_row(i - 1, j);
                    step += 2;
                } else {
                    step = 1;
                }
            }
            step = 1;
            for (std::size_t i = rows - 1; i-- > 0;) {
                const auto below = vert(i + 1, j);
                if (!DistanceMap::is_infinite(below) &&
                    (DistanceMap::is_infinite(vert(i, j)) || vert(i, j) > below + step)) {
                    vert(i, j) = below + step;
                    src_row(i, j) = src_row(i + 1, j);
                    step += 2;
                } else {
                    step = 1;
                }
            }
        }
    });

    LabelMap labels(rows, cols);
    envelope_rows(vert, EnvelopeTie::keep_old, nullptr, threads,
                  [&](std::size_t i, std::size_t j, std::int64_t k, std::int64_t, bool sentinel,
                      std::int64_t) {
                      if (sentinel) return;
                      const auto col = static_cast<std::size_t>(k);
                      labels(i, j) = id_at(src_row(i, col), col);
                  });
    return labels;
}

}  // namespace distfield
