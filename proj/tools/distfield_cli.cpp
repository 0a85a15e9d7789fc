// distfield: binary-image distance transforms, reference charts, Voronoi
// labels, and a benchmark mode.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "distfield/bench.hpp"
#include "distfield/exact_edt.hpp"
#include "distfield/metrics.hpp"
#include "distfield/netpbm.hpp"
#include "distfield/propagation.hpp"
#include "distfield/random_image.hpp"
#include "distfield/vector_dt.hpp"

using namespace distfield;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << bytes;
}

// Point-list format: one "row col" pair per line, 0-based, '#' comments.
BinaryImage image_from_points_file(const std::string& path, std::size_t rows,
                                   std::size_t cols) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<GridPoint> points;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::size_t r, c;
        if (!(ls >> r)) continue;  // blank or comment-only line
        if (!(ls >> c))
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected \"row col\"");
        points.push_back({r, c});
    }
    return BinaryImage::from_points(rows, cols, points);
}

std::size_t parse_count(const std::string& text, const char* what) {
    try {
        std::size_t pos = 0;
        const auto v = std::stoull(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error(std::string("invalid ") + what + ": " + text);
    }
}

std::pair<std::size_t, std::size_t> parse_size(const std::string& text) {
    const auto x = text.find('x');
    if (x == std::string::npos || x == 0 || x + 1 >= text.size())
        throw std::runtime_error("--size expects ROWSxCOLS, e.g. 9x10");
    return {parse_count(text.substr(0, x), "row count"),
            parse_count(text.substr(x + 1), "column count")};
}

unsigned default_threads() {
    if (const char* env = std::getenv("DISTFIELD_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    return 1;
}

struct InputOptions {
    std::string input_path;
    std::string points_path;
    std::string size_text;
    std::string polarity = "outside";
};

void add_input_options(CLI::App* cmd, InputOptions& opts, bool with_polarity) {
    cmd->add_option("--input", opts.input_path, "input bitmap (P1 or P4)");
    cmd->add_option("--points-file", opts.points_path,
                    "point list, one \"row col\" per line, 0-based");
    cmd->add_option("--size", opts.size_text, "grid size ROWSxCOLS for --points-file");
    if (with_polarity)
        cmd->add_option("--polarity", opts.polarity,
                        "outside: background to nearest object; inside: invert first")
            ->check(CLI::IsMember({"outside", "inside"}));
}

BinaryImage load_image(const InputOptions& opts) {
    if (!opts.input_path.empty() && !opts.points_path.empty())
        throw std::runtime_error("choose one of --input or --points-file");
    BinaryImage img(1, 1);
    if (!opts.input_path.empty()) {
        img = read_netpbm(read_file(opts.input_path));
    } else if (!opts.points_path.empty()) {
        if (opts.size_text.empty())
            throw std::runtime_error("--points-file requires --size ROWSxCOLS");
        const auto [rows, cols] = parse_size(opts.size_text);
        img = image_from_points_file(opts.points_path, rows, cols);
    } else {
        throw std::runtime_error("an input is required (--input or --points-file)");
    }
    return opts.polarity == "inside" ? img.inverted() : img;
}

// ---- transform ---------------------------------------------------------------

struct TransformOptions {
    InputOptions input;
    std::string metric = "euclidean";
    std::string algorithm;
    std::string orient = "auto";
    std::string dump_path;
    std::string gray_path;
    std::string gray_mode = "auto";
    std::string labels_path;
    std::string offsets_path;
    bool sqrt_dump = false;
    bool normalized = false;
    unsigned threads = default_threads();
};

Orientation parse_orient(const std::string& name) {
    if (name == "auto") return Orientation::automatic;
    if (name == "rows") return Orientation::rows;
    if (name == "columns") return Orientation::columns;
    throw std::runtime_error("unknown orientation " + name);
}

int run_transform(const TransformOptions& opts) {
    if (opts.dump_path.empty() && opts.gray_path.empty() && opts.labels_path.empty() &&
        opts.offsets_path.empty())
        throw std::runtime_error("no output requested (--dump, --gray, --labels, --offsets)");

    std::string algorithm = opts.algorithm;
    if (algorithm.empty())
        algorithm = opts.metric == "cityblock" ? "sequential" : "envelope";
    else if (opts.metric == "chamfer34")
        throw std::runtime_error("chamfer34 takes no --algorithm");

    const BinaryImage img = load_image(opts.input);
    if (img.object_count() == 0)
        std::cerr << "warning: no features, distances are infinite everywhere\n";

    DistanceMap dm(1, 1, DistanceKind::cityblock);
    std::optional<VectorDtResult> vector_state;

    if (opts.metric == "cityblock") {
        if (algorithm == "sequential")
            dm = cityblock_sequential(img);
        else if (algorithm == "separable")
            dm = cityblock_separable(img, opts.threads);
        else
            throw std::runtime_error("cityblock supports --algorithm sequential|separable");
    } else if (opts.metric == "chamfer34") {
        dm = chamfer34(img);
    } else if (opts.metric == "euclidean") {
        if (algorithm == "danielsson") {
            vector_state = danielsson(img);
            dm = vector_state->distance;
        } else {
            const auto parsed = parse_algorithm(algorithm);
            if (!parsed)
                throw std::runtime_error(
                    "euclidean supports --algorithm bruteforce|simple|improved|envelope|"
                    "danielsson");
            dm = edt(img, *parsed, parse_orient(opts.orient), nullptr, opts.threads);
        }
    } else {
        throw std::runtime_error("unknown --metric " + opts.metric);
    }

    if (!opts.offsets_path.empty() && !vector_state)
        throw std::runtime_error("--offsets requires --algorithm danielsson");
    if (opts.sqrt_dump && dm.kind() != DistanceKind::squared_euclidean)
        throw std::runtime_error("--sqrt applies to euclidean results only");
    if (opts.normalized && dm.kind() != DistanceKind::chamfer3)
        throw std::runtime_error("--normalized applies to chamfer34 results only");
    if (!opts.labels_path.empty() && (opts.metric != "euclidean" || vector_state))
        throw std::runtime_error("--labels requires an exact euclidean algorithm");

    if (!opts.dump_path.empty()) {
        if (opts.normalized)
            write_file(opts.dump_path, to_text(chamfer_normalized(dm)));
        else
            write_file(opts.dump_path, opts.sqrt_dump ? to_text_sqrt(dm) : to_text(dm));
    }
    if (!opts.gray_path.empty()) {
        GrayMapping mode = GrayMapping::linear;
        if (opts.gray_mode == "sqrt-linear" ||
            (opts.gray_mode == "auto" && dm.kind() == DistanceKind::squared_euclidean))
            mode = GrayMapping::sqrt_linear;
        write_file(opts.gray_path, write_netpbm(to_gray(dm, mode), PgmVariant::raw));
    }
    if (!opts.labels_path.empty()) {
        const auto labels = voronoi_labels(img, opts.threads);
        write_file(opts.labels_path,
                   write_netpbm(labels_to_gray(labels, img.object_count()), PgmVariant::raw));
    }
    if (!opts.offsets_path.empty())
        write_file(opts.offsets_path, to_text(vector_state->offsets));
    return 0;
}

// ---- chart -------------------------------------------------------------------

struct ChartOptions {
    std::string metric = "euclidean";
    std::string exponent;
    double straight = 1.0;
    std::string diag;
    std::size_t radius = 0;
    std::string extents_text;
    bool squared = false;
    std::string dump_path;
};

double parse_diag(const std::string& text) {
    if (text == "sqrt2") return std::sqrt(2.0);
    if (text == "4/3") return 4.0 / 3.0;
    return std::stod(text);
}

int run_chart(const ChartOptions& opts) {
    MetricSpec spec = MetricSpec::minkowski_metric(MinkowskiExponent::finite(2.0));
    if (opts.metric == "euclidean") {
        // default spec
    } else if (opts.metric == "cityblock") {
        spec = MetricSpec::minkowski_metric(MinkowskiExponent::finite(1.0));
    } else if (opts.metric == "chessboard") {
        spec = MetricSpec::minkowski_metric(MinkowskiExponent::chebyshev());
    } else if (opts.metric == "minkowski") {
        if (opts.exponent.empty()) throw std::runtime_error("minkowski requires --exponent");
        spec = MetricSpec::minkowski_metric(opts.exponent == "inf"
                                                ? MinkowskiExponent::chebyshev()
                                                : MinkowskiExponent::finite(
                                                      std::stod(opts.exponent)));
    } else if (opts.metric == "chamfer") {
        if (opts.diag.empty()) throw std::runtime_error("chamfer requires --diag");
        spec = MetricSpec::chamfer_metric(opts.straight, parse_diag(opts.diag));
    } else {
        throw std::runtime_error("unknown --metric " + opts.metric);
    }

    Grid<double> chart(1, 1);
    if (!opts.extents_text.empty()) {
        ChartExtents ext;
        if (std::sscanf(opts.extents_text.c_str(), "%zu,%zu,%zu,%zu", &ext.up, &ext.down,
                        &ext.left, &ext.right) != 4)
            throw std::runtime_error("--extents expects UP,DOWN,LEFT,RIGHT");
        chart = reference_chart(spec, ext, opts.squared);
    } else if (opts.radius > 0) {
        chart = reference_chart(spec, opts.radius, opts.squared);
    } else {
        throw std::runtime_error("--radius or --extents is required");
    }

    const std::string text = to_text(round_to_tenths(chart));
    if (opts.dump_path.empty())
        std::cout << text;
    else
        write_file(opts.dump_path, text);
    return 0;
}

// ---- labels ------------------------------------------------------------------

struct LabelsOptions {
    InputOptions input;
    std::string out_path;
    std::string dump_path;
    unsigned threads = default_threads();
};

int run_labels(const LabelsOptions& opts) {
    if (opts.out_path.empty() && opts.dump_path.empty())
        throw std::runtime_error("no output requested (--out, --dump)");
    const BinaryImage img = load_image(opts.input);
    const auto labels = voronoi_labels(img, opts.threads);
    if (!opts.out_path.empty())
        write_file(opts.out_path,
                   write_netpbm(labels_to_gray(labels, img.object_count()), PgmVariant::raw));
    if (!opts.dump_path.empty()) write_file(opts.dump_path, to_text(labels));
    return 0;
}

// ---- bench -------------------------------------------------------------------

struct BenchOptions {
    std::string sizes_text = "64,128,256";
    double density = 0.02;
    std::string algorithms_text = "simple,envelope";
    unsigned reps = 1;
    std::uint64_t seed = 1;
    unsigned threads = default_threads();
    std::string out_path;
};

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> parts;
    std::istringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ','))
        if (!part.empty()) parts.push_back(part);
    return parts;
}

int run_bench_cmd(const BenchOptions& opts) {
    BenchConfig config;
    for (const auto& s : split_commas(opts.sizes_text))
        config.sizes.push_back(parse_count(s, "size"));
    for (const auto& a : split_commas(opts.algorithms_text)) {
        const auto parsed = parse_algorithm(a);
        if (!parsed) throw std::runtime_error("unknown algorithm " + a);
        config.algorithms.push_back(*parsed);
    }
    if (config.sizes.empty() || config.algorithms.empty())
        throw std::runtime_error("bench needs at least one size and one algorithm");
    config.density = opts.density;
    config.reps = opts.reps;
    config.seed = opts.seed;
    config.threads = opts.threads;

    const std::string csv = to_csv(run_bench(config));
    if (opts.out_path.empty())
        std::cout << csv;
    else
        write_file(opts.out_path, csv);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"binary-image distance transforms"};
    app.require_subcommand(1);

    TransformOptions transform;
    auto* t = app.add_subcommand("transform", "compute a distance map");
    add_input_options(t, transform.input, true);
    t->add_option("--metric", transform.metric, "euclidean|cityblock|chamfer34");
    t->add_option("--algorithm", transform.algorithm,
                  "euclidean: bruteforce|simple|improved|envelope|danielsson; "
                  "cityblock: sequential|separable");
    t->add_option("--orient", transform.orient, "auto|rows|columns")
        ->check(CLI::IsMember({"auto", "rows", "columns"}));
    t->add_option("--dump", transform.dump_path, "write the plain-text matrix");
    t->add_flag("--sqrt", transform.sqrt_dump, "dump real distances sqrt(D)");
    t->add_flag("--normalized", transform.normalized, "dump chamfer values as (d/3)^2");
    t->add_option("--gray", transform.gray_path, "write a P5 graymap rendering");
    t->add_option("--gray-mode", transform.gray_mode, "auto|linear|sqrt-linear")
        ->check(CLI::IsMember({"auto", "linear", "sqrt-linear"}));
    t->add_option("--labels", transform.labels_path, "write Voronoi labels as a P5 graymap");
    t->add_option("--offsets", transform.offsets_path,
                  "write relative positions (danielsson only)");
    t->add_option("--threads", transform.threads, "worker threads for parallel phases");

    ChartOptions chart;
    auto* c = app.add_subcommand("chart", "print a reference distance chart");
    c->add_option("--metric", chart.metric, "euclidean|cityblock|chessboard|minkowski|chamfer");
    c->add_option("--exponent", chart.exponent, "minkowski exponent (>= 1, or inf)");
    c->add_option("--straight", chart.straight, "chamfer straight step");
    c->add_option("--diag", chart.diag, "chamfer diagonal step (number, sqrt2, 4/3)");
    c->add_option("--radius", chart.radius, "window radius around the centre");
    c->add_option("--extents", chart.extents_text, "window extents UP,DOWN,LEFT,RIGHT");
    c->add_flag("--squared", chart.squared, "emit squared distances");
    c->add_option("--dump", chart.dump_path, "write to a file instead of stdout");

    LabelsOptions labels;
    auto* l = app.add_subcommand("labels", "compute Voronoi labels");
    add_input_options(l, labels.input, false);
    l->add_option("--out", labels.out_path, "write labels as a P5 graymap");
    l->add_option("--dump", labels.dump_path, "write raw label ids as text");
    l->add_option("--threads", labels.threads, "worker threads");

    BenchOptions bench;
    auto* b = app.add_subcommand("bench", "benchmark the exact-transform scanners");
    b->add_option("--sizes", bench.sizes_text, "comma-separated square sizes");
    b->add_option("--density", bench.density, "object-pixel density in [0,1]");
    b->add_option("--algorithms", bench.algorithms_text,
                  "comma-separated: bruteforce,simple,improved,envelope");
    b->add_option("--reps", bench.reps, "repetitions per size");
    b->add_option("--seed", bench.seed, "workload seed");
    b->add_option("--threads", bench.threads, "worker threads");
    b->add_option("--out", bench.out_path, "write CSV to a file instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (t->parsed()) return run_transform(transform);
        if (c->parsed()) return run_chart(chart);
        if (l->parsed()) return run_labels(labels);
        if (b->parsed()) return run_bench_cmd(bench);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
