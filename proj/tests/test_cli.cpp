// End-to-end checks against the built command-line binary.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "distfield/grid.hpp"
#include "goldens.hpp"

namespace fs = std::filesystem;

namespace {

const std::string kCli = DISTFIELD_CLI_PATH;
const std::string kFixtures = DISTFIELD_FIXTURE_DIR;

struct RunResult {
    int code = -1;
    std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
    const std::string cmd = kCli + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    RunResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) result.output += buf.data();
    const int status = pclose(pipe);
    result.code = WEXITSTATUS(status);
    return result;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path temp_dir() {
    const auto dir = fs::temp_directory_path() / "distfield_cli_tests";
    fs::create_directories(dir);
    return dir;
}

std::string expected_squared_text() {
    distfield::DistanceMap dm(golden::kRows6, golden::kCols6,
                              distfield::DistanceKind::squared_euclidean);
    for (std::size_t i = 0; i < golden::kRows6; ++i)
        for (std::size_t j = 0; j < golden::kCols6; ++j)
            dm(i, j) = static_cast<std::uint64_t>(golden::kSquaredEuclidean[i][j]);
    return to_text(dm);
}

const std::string kPointArgs =
    "--points-file " + kFixtures + "/points6.txt --size 9x10";

}  // namespace

TEST_CASE("transform dumps the exact squared distances") {
    const auto dump = temp_dir() / "squared.txt";
    const auto r = run("transform " + kPointArgs +
                       " --metric euclidean --algorithm envelope --dump " + dump.string());
    CHECK(r.code == 0);
    CHECK(slurp(dump) == expected_squared_text());
}

TEST_CASE("gray rendering is identical across exact algorithms") {
    std::string first;
    for (const std::string alg : {"bruteforce", "simple", "improved", "envelope"}) {
        const auto gray = temp_dir() / ("gray_" + alg + ".pgm");
        const auto r = run("transform " + kPointArgs + " --algorithm " + alg + " --gray " +
                           gray.string());
        CHECK(r.code == 0);
        const auto bytes = slurp(gray);
        if (first.empty())
            first = bytes;
        else
            CHECK(bytes == first);
    }
    CHECK(first.substr(0, 2) == "P5");
}

TEST_CASE("repeated runs are byte-identical") {
    const auto a = temp_dir() / "rep_a.txt";
    const auto b = temp_dir() / "rep_b.txt";
    CHECK(run("transform " + kPointArgs + " --metric cityblock --dump " + a.string()).code == 0);
    CHECK(run("transform " + kPointArgs + " --metric cityblock --dump " + b.string()).code == 0);
    CHECK(slurp(a) == slurp(b));
}

TEST_CASE("featureless input warns and dumps an all-infinite matrix") {
    const auto pbm = temp_dir() / "white.pbm";
    {
        std::ofstream out(pbm);
        out << "P1\n3 2\n000\n000\n";
    }
    const auto dump = temp_dir() / "white.txt";
    const auto r = run("transform --input " + pbm.string() + " --dump " + dump.string());
    CHECK(r.code == 0);
    CHECK(r.output.find("warning") != std::string::npos);
    CHECK(slurp(dump) == "inf inf inf\ninf inf inf\n");
}

TEST_CASE("incompatible flags are rejected") {
    CHECK(run("transform " + kPointArgs + " --algorithm envelope --offsets /dev/null").code != 0);
    CHECK(run("transform " + kPointArgs + " --metric cityblock --sqrt --dump /dev/null").code !=
          0);
    CHECK(run("transform " + kPointArgs).code != 0);  // no output target
    CHECK(run("transform " + kPointArgs + " --metric cityblock --algorithm envelope --dump "
              "/dev/null").code != 0);
    CHECK(run("transform " + kPointArgs + " --metric chamfer34 --algorithm simple --dump "
              "/dev/null").code != 0);
    CHECK(run("transform " + kPointArgs + " --metric euclidean --normalized --dump "
              "/dev/null").code != 0);
}

TEST_CASE("chamfer normalized dump") {
    const auto dump = temp_dir() / "norm.txt";
    const auto r = run("transform " + kPointArgs + " --metric chamfer34 --normalized --dump " +
                       dump.string());
    CHECK(r.code == 0);
    std::istringstream lines(slurp(dump));
    std::string line0;
    std::getline(lines, line0);
    CHECK(line0 == "18.8 11.1 5.4 1.8 1 1.8 5.4 4 5.4 7.1");
}

TEST_CASE("danielsson offsets dump") {
    const auto offsets = temp_dir() / "offsets.txt";
    const auto r = run("transform " + kPointArgs +
                       " --algorithm danielsson --offsets " + offsets.string());
    CHECK(r.code == 0);
    std::istringstream lines(slurp(offsets));
    std::string line0;
    std::getline(lines, line0);
    CHECK(line0 == "4,1 1,3 1,2 1,1 1,0 1,1 2,1 2,0 2,1 2,2");
}

TEST_CASE("chart prints the rounded window") {
    const auto r = run("chart --metric chamfer --diag sqrt2 --squared --extents 4,4,4,5");
    CHECK(r.code == 0);
    std::istringstream lines(r.output);
    std::string line, last;
    std::size_t count = 0;
    while (std::getline(lines, line)) {
        last = line;
        ++count;
    }
    CHECK(count == 9);
    CHECK(last.substr(last.rfind(' ') + 1) == "44.3");

    const auto centre = run("chart --metric euclidean --squared --radius 1");
    CHECK(centre.output == "2 1 2\n1 0 1\n2 1 2\n");
}

TEST_CASE("labels dump ids") {
    const auto single = temp_dir() / "single.txt";
    {
        std::ofstream out(single);
        out << "2 3\n";
    }
    const auto ids = temp_dir() / "ids.txt";
    const auto r = run("labels --points-file " + single.string() + " --size 5 6 --dump " +
                       ids.string());
    CHECK(r.code != 0);  // malformed --size
    const auto ok = run("labels --points-file " + single.string() + " --size 5x6 --dump " +
                        ids.string());
    CHECK(ok.code == 0);
    std::istringstream lines(slurp(ids));
    std::string line;
    while (std::getline(lines, line)) CHECK(line == "0 0 0 0 0 0");
}

TEST_CASE("bench emits the CSV schema with reproducible counts") {
    const auto r1 = run("bench --sizes 16,32 --density 0.05 --algorithms simple,envelope "
                        "--reps 2 --seed 7");
    CHECK(r1.code == 0);
    std::istringstream lines(r1.output);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "cells,algorithm,size,rep,wall_ns,candidates");
    std::size_t rows = 0;
    std::string line;
    while (std::getline(lines, line)) ++rows;
    CHECK(rows == 8);  // 2 sizes x 2 reps x 2 algorithms

    const auto strip_wall = [](const std::string& csv) {
        std::istringstream in(csv);
        std::string out, row;
        while (std::getline(in, row)) {
            // drop the wall_ns column (5th field)
            std::vector<std::string> fields;
            std::istringstream rs(row);
            std::string f;
            while (std::getline(rs, f, ',')) fields.push_back(f);
            if (fields.size() == 6) fields.erase(fields.begin() + 4);
            for (std::size_t i = 0; i < fields.size(); ++i)
                out += fields[i] + (i + 1 < fields.size() ? "," : "");
            out += '\n';
        }
        return out;
    };
    const auto r2 = run("bench --sizes 16,32 --density 0.05 --algorithms simple,envelope "
                        "--reps 2 --seed 7");
    CHECK(strip_wall(r1.output) == strip_wall(r2.output));
}
