#include "distfield/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace distfield {

MinkowskiExponent MinkowskiExponent::finite(double e) {
    if (!(e >= 1.0)) throw std::invalid_argument("minkowski exponent must satisfy e >= 1");
    return MinkowskiExponent(false, e);
}

double MinkowskiExponent::value() const {
    if (infinite_) throw std::logic_error("chebyshev exponent has no finite value");
    return value_;
}

double minkowski(std::span<const double> p, std::span<const double> q, MinkowskiExponent e) {
    if (p.size() != q.size() || p.empty())
        throw std::invalid_argument("minkowski points must share a dimension >= 1");
    if (e.is_infinite()) {
        double best = 0.0;
        for (std::size_t i = 0; i < p.size(); ++i)
            best = std::max(best, std::abs(p[i] - q[i]));
        return best;
    }
    const double order = e.value();
    if (order == 1.0) {
        double sum = 0.0;
        for (std::size_t i = 0; i < p.size(); ++i) sum += std::abs(p[i] - q[i]);
        return sum;
    }
    if (order == 2.0) {
        double sum = 0.0;
        for (std::size_t i = 0; i < p.size(); ++i) {
            const double d = p[i] - q[i];
            sum += d * d;
        }
        return std::sqrt(sum);
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i)
        sum += std::pow(std::abs(p[i] - q[i]), order);
    return std::pow(sum, 1.0 / order);
}

MetricSpec MetricSpec::minkowski_metric(MinkowskiExponent e) {
    MetricSpec spec;
    spec.family = Family::minkowski;
    spec.exponent = e;
    return spec;
}

MetricSpec MetricSpec::chamfer_metric(double straight, double diagonal) {
    if (!(straight > 0.0) || !(diagonal > 0.0))
        throw std::invalid_argument("chamfer steps must be positive");
    const double ratio = diagonal / straight;
    if (!(ratio >= 1.0) || !(ratio <= 2.0))
        throw std::invalid_argument("chamfer diagonal/straight ratio must lie in [1, 2]");
    MetricSpec spec;
    spec.family = Family::chamfer;
    spec.straight_step = straight;
    spec.diagonal_step = diagonal;
    return spec;
}

MetricSpec MetricSpec::for_kind(DistanceKind kind) {
    switch (kind) {
        case DistanceKind::cityblock:
            return minkowski_metric(MinkowskiExponent::finite(1.0));
        case DistanceKind::chessboard:
            return minkowski_metric(MinkowskiExponent::chebyshev());
        case DistanceKind::squared_euclidean:
            return minkowski_metric(MinkowskiExponent::finite(2.0));
        case DistanceKind::chamfer3:
            return chamfer_metric(3.0, 4.0);
    }
    throw std::invalid_argument("unknown distance kind");
}

namespace {

double offset_distance(const MetricSpec& metric, std::size_t dr, std::size_t dc) {
    if (metric.family == MetricSpec::Family::chamfer) {
        const std::size_t diag_steps = std::min(dr, dc);
        const std::size_t straight_steps = std::max(dr, dc) - diag_steps;
        return static_cast<double>(diag_steps) * metric.diagonal_step +
               static_cast<double>(straight_steps) * metric.straight_step;
    }
    const double p[2] = {0.0, 0.0};
    const double q[2] = {static_cast<double>(dr), static_cast<double>(dc)};
    return minkowski(p, q, metric.exponent);
}

}  // namespace

Grid<double> reference_chart(const MetricSpec& metric, const ChartExtents& ext, bool squared) {
    Grid<double> chart(ext.up + ext.down + 1, ext.left + ext.right + 1);
    for (std::size_t i = 0; i < chart.rows(); ++i) {
        for (std::size_t j = 0; j < chart.cols(); ++j) {
            const std::size_t dr = i > ext.up ? i - ext.up : ext.up - i;
            const std::size_t dc = j > ext.left ? j - ext.left : ext.left - j;
            const double d = offset_distance(metric, dr, dc);
            chart(i, j) = squared ? d * d : d;
        }
    }
    return chart;
}

Grid<double> reference_chart(const MetricSpec& metric, std::size_t radius, bool squared) {
    if (radius == 0) throw std::invalid_argument("chart radius must be at least 1");
    return reference_chart(metric, ChartExtents{radius, radius, radius, radius}, squared);
}

Grid<double> round_to_tenths(Grid<double> m) {
    for (auto& v : m.cells()) v = std::round(v * 10.0) / 10.0;
    return m;
}

ChartErrorStats chart_error_stats(const Grid<double>& chart, const Grid<double>& reference) {
    if (chart.rows() != reference.rows() || chart.cols() != reference.cols())
        throw std::invalid_argument("chart shapes differ");
    ChartErrorStats stats;
    double sum = 0.0;
    for (std::size_t i = 0; i < chart.rows(); ++i) {
        for (std::size_t j = 0; j < chart.cols(); ++j) {
            const double err = std::abs(std::sqrt(reference(i, j)) - std::sqrt(chart(i, j)));
            sum += err;
            stats.max_abs = std::max(stats.max_abs, err);
        }
    }
    stats.mean_abs = sum / static_cast<double>(chart.size());
    return stats;
}

}  // namespace distfield
