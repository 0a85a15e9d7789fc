#include <doctest.h>

#include "distfield/propagation.hpp"
#include "distfield/random_image.hpp"
#include "goldens.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace distfield;

TEST_CASE("city-block forward pass intermediate state") {
    auto dm = init_distance_map(golden::six_point_image(), DistanceKind::cityblock);
    cityblock_forward_pass(dm);
    CHECK(testutil::diff_map(dm, golden::kCityblockForward) == "");
    CHECK(dm(8, 4) == 7);
}

TEST_CASE("city-block sequential final state") {
    const auto dm = cityblock_sequential(golden::six_point_image());
    CHECK(testutil::diff_map(dm, golden::kCityblockFinal) == "");
    CHECK(dm(0, 0) == 5);
    CHECK(dm(0, 9) == 4);
    CHECK(dm(8, 0) == 5);
    CHECK(dm(8, 9) == 4);
}

TEST_CASE("city-block separable vertical intermediate and final") {
    auto dm = init_distance_map(golden::six_point_image(), DistanceKind::cityblock);
    cityblock_vertical_passes(dm);
    CHECK(testutil::diff_map(dm, golden::kCityblockVertical) == "");
    // column 4 top to bottom
    const std::uint64_t col4[] = {1, 0, 1, 2, 3, 4, 5, 6, 7};
    for (std::size_t i = 0; i < 9; ++i) CHECK(dm(i, 4) == col4[i]);

    cityblock_horizontal_passes(dm);
    CHECK(testutil::diff_map(dm, golden::kCityblockFinal) == "");
}

TEST_CASE("city-block 1-D ramp") {
    const GridPoint origin[] = {{0, 0}};
    const auto dm = cityblock_sequential(BinaryImage::from_points(1, 4, origin));
    for (std::size_t j = 0; j < 4; ++j) CHECK(dm(0, j) == j);
}

TEST_CASE("city-block variants agree with each other and the direct minimum") {
    Xorshift64Star rng(31);
    for (int trial = 0; trial < 12; ++trial) {
        const std::size_t rows = 1 + rng.next() % 64;
        const std::size_t cols = 1 + rng.next() % 64;
        const double density = (trial % 3) ? 0.03 : 0.3;
        const auto img = generate_random_image(rows, cols, density, rng.next());
        const auto seq = cityblock_sequential(img);
        CHECK(testutil::maps_equal(seq, cityblock_separable(img)));
        CHECK(testutil::maps_equal(seq, cityblock_separable(img, 4)));
        CHECK(testutil::maps_equal(seq, oracle::cityblock(img)));
    }
}

TEST_CASE("city-block passes are idempotent") {
    auto dm = cityblock_sequential(golden::six_point_image());
    auto again = dm;
    cityblock_forward_pass(again);
    cityblock_backward_pass(again);
    CHECK(testutil::maps_equal(again, dm));

    auto sep = cityblock_separable(golden::six_point_image());
    auto sep_again = sep;
    cityblock_vertical_passes(sep_again);
    cityblock_horizontal_passes(sep_again);
    CHECK(testutil::maps_equal(sep_again, sep));
}

TEST_CASE("empty feature set yields all-infinite maps") {
    const BinaryImage img(4, 5);
    CHECK(cityblock_sequential(img).all_infinite());
    CHECK(cityblock_separable(img).all_infinite());
    CHECK(chamfer34(img).all_infinite());
}

TEST_CASE("chamfer forward pass intermediate state") {
    auto dm = init_distance_map(golden::six_point_image(), DistanceKind::chamfer3);
    chamfer_forward_pass(dm);
    CHECK(testutil::diff_map(dm, golden::kChamferForward) == "");
    CHECK(dm(8, 0) == 13);
}

TEST_CASE("chamfer final state") {
    const auto dm = chamfer34(golden::six_point_image());
    CHECK(testutil::diff_map(dm, golden::kChamferFinal) == "");
    CHECK(dm(0, 0) == 13);
    CHECK(dm(4, 4) == 4);
    CHECK(dm(8, 9) == 8);
}

TEST_CASE("chamfer one-step ring around a single feature") {
    const GridPoint centre[] = {{1, 1}};
    const auto dm = chamfer34(BinaryImage::from_points(3, 3, centre));
    CHECK(dm(1, 1) == 0);
    CHECK(dm(0, 1) == 3);
    CHECK(dm(1, 0) == 3);
    CHECK(dm(1, 2) == 3);
    CHECK(dm(2, 1) == 3);
    CHECK(dm(0, 0) == 4);
    CHECK(dm(0, 2) == 4);
    CHECK(dm(2, 0) == 4);
    CHECK(dm(2, 2) == 4);
}

TEST_CASE("chamfer equals the weighted shortest-path metric on small grids") {
    Xorshift64Star rng(47);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t rows = 1 + rng.next() % 24;
        const std::size_t cols = 1 + rng.next() % 24;
        const auto img = generate_random_image(rows, cols, 0.08, rng.next());
        CHECK(testutil::maps_equal(chamfer34(img), oracle::chamfer_dijkstra(img)));
    }
}

TEST_CASE("chamfer/3 lies between chessboard and city-block") {
    Xorshift64Star rng(53);
    for (int trial = 0; trial < 6; ++trial) {
        const auto img = generate_random_image(32, 40, 0.05, rng.next());
        if (img.object_count() == 0) continue;
        const auto cham = chamfer34(img);
        const auto chess = oracle::chessboard(img);
        const auto city = oracle::cityblock(img);
        for (std::size_t i = 0; i < img.rows(); ++i)
            for (std::size_t j = 0; j < img.cols(); ++j) {
                CHECK(cham(i, j) >= 3 * chess(i, j));
                CHECK(cham(i, j) <= 3 * city(i, j));
            }
    }
}

TEST_CASE("zero exactly at object pixels") {
    const auto img = generate_random_image(20, 20, 0.1, 77);
    const auto city = cityblock_sequential(img);
    const auto cham = chamfer34(img);
    for (std::size_t i = 0; i < 20; ++i)
        for (std::size_t j = 0; j < 20; ++j) {
            CHECK((city(i, j) == 0) == img.is_object(i, j));
            CHECK((cham(i, j) == 0) == img.is_object(i, j));
        }
}

TEST_CASE("chamfer normalization") {
    const auto dm = chamfer34(golden::six_point_image());
    const auto norm = chamfer_normalized(dm);
    for (std::size_t i = 0; i < norm.rows(); ++i)
        for (std::size_t j = 0; j < norm.cols(); ++j)
            CHECK(std::llround(norm(i, j) * 10) == golden::kChamferNormalizedTenths[i][j]);

    DistanceMap tiny(1, 3, DistanceKind::chamfer3);
    tiny(0, 0) = 0;
    tiny(0, 1) = 3;
    tiny(0, 2) = 4;
    const auto n = chamfer_normalized(tiny);
    CHECK(n(0, 0) == 0.0);
    CHECK(std::llround(n(0, 1) * 10) == 10);
    CHECK(std::llround(n(0, 2) * 10) == 18);

    const auto wrong = cityblock_sequential(golden::six_point_image());
    CHECK_THROWS_AS(static_cast<void>(chamfer_normalized(wrong)), std::invalid_argument);
}
