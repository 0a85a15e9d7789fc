#pragma once

#include <cstddef>
#include <span>

#include "distfield/grid.hpp"

namespace distfield {

// Minkowski order; infinity is a distinguished case rather than a huge float
// so |delta|^e never overflows.
class MinkowskiExponent {
public:
    static MinkowskiExponent finite(double e);
    static MinkowskiExponent chebyshev() { return MinkowskiExponent(true, 0.0); }

    bool is_infinite() const { return infinite_; }
    double value() const;

    friend bool operator==(const MinkowskiExponent&, const MinkowskiExponent&) = default;

private:
    MinkowskiExponent(bool infinite, double value) : infinite_(infinite), value_(value) {}
    bool infinite_;
    double value_;
};

// (sum |p_i - q_i|^e)^(1/e); e=1 city-block, e=2 euclidean, e=inf chessboard.
// Works for any dimension D >= 1; throws on dimension mismatch.
double minkowski(std::span<const double> p, std::span<const double> q, MinkowskiExponent e);

struct MetricSpec {
    enum class Family : std::uint8_t { minkowski, chamfer };

    Family family = Family::minkowski;
    MinkowskiExponent exponent = MinkowskiExponent::finite(2.0);
    double straight_step = 1.0;   // chamfer only
    double diagonal_step = 1.0;   // chamfer only

    static MetricSpec minkowski_metric(MinkowskiExponent e);
    // Requires 1 <= diagonal/straight <= 2 (covers chessboard, sqrt2, 4/3,
    // 1.351 and city-block as the degenerate ratio-2 case).
    static MetricSpec chamfer_metric(double straight, double diagonal);
    // cityblock -> e=1, chessboard -> e=inf, squared_euclidean -> e=2,
    // chamfer3 -> steps 3/4.
    static MetricSpec for_kind(DistanceKind kind);
};

// Distances from a centre pixel over an explicit window: `up` rows above the
// centre, `down` below, `left` columns left, `right` columns right.
struct ChartExtents {
    std::size_t up = 0;
    std::size_t down = 0;
    std::size_t left = 0;
    std::size_t right = 0;
};

// Chamfer charts decompose each offset diagonal-first: min(|dr|,|dc|) diagonal
// steps then the axis remainder in straight steps. With `squared` the chart
// holds d^2 (the usual display form for euclidean-family comparisons).
Grid<double> reference_chart(const MetricSpec& metric, const ChartExtents& extents, bool squared);
Grid<double> reference_chart(const MetricSpec& metric, std::size_t radius, bool squared);

// round(10 v)/10 per cell, the display precision of the charts.
Grid<double> round_to_tenths(Grid<double> m);

struct ChartErrorStats {
    double mean_abs = 0.0;
    double max_abs = 0.0;
};

// Per-cell |sqrt(reference) - sqrt(chart)| statistics; both inputs must hold
// squared values of equal shape.
ChartErrorStats chart_error_stats(const Grid<double>& chart, const Grid<double>& reference);

}  // namespace distfield
