#include <doctest.h>

#include "distfield/grid.hpp"
#include "distfield/propagation.hpp"
#include "distfield/random_image.hpp"
#include "goldens.hpp"

using namespace distfield;

TEST_CASE("from_points places object pixels") {
    const auto img = golden::six_point_image();
    CHECK(img.object_count() == 6);
    for (const auto& p : golden::kSixPoints) CHECK(img.is_object(p.row, p.col));
    CHECK_FALSE(img.is_object(0, 0));
}

TEST_CASE("from_points single cell and empty set") {
    const GridPoint origin[] = {{0, 0}};
    const auto single = BinaryImage::from_points(1, 1, origin);
    CHECK(single.object_count() == 1);

    const auto empty = BinaryImage::from_points(3, 3, {});
    CHECK(empty.object_count() == 0);
}

TEST_CASE("from_points collapses duplicates and rejects out-of-bounds") {
    const GridPoint dup[] = {{1, 1}, {1, 1}};
    CHECK(BinaryImage::from_points(2, 2, dup).object_count() == 1);

    const GridPoint bad[] = {{2, 5}};
    CHECK_THROWS_WITH_AS(static_cast<void>(BinaryImage::from_points(3, 5, bad)),
                         doctest::Contains("(2, 5)"), std::out_of_range);
}

TEST_CASE("init_distance_map zeroes features, marks the rest infinite") {
    const auto dm = init_distance_map(golden::six_point_image(), DistanceKind::cityblock);
    for (std::size_t i = 0; i < dm.rows(); ++i)
        for (std::size_t j = 0; j < dm.cols(); ++j) {
            const bool feature = golden::six_point_image().is_object(i, j);
            CHECK(DistanceMap::is_infinite(dm(i, j)) == !feature);
        }
}

TEST_CASE("init_distance_map all-object and featureless cases") {
    BinaryImage all(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) all.set_object(i, j);
    const auto zeros = init_distance_map(all, DistanceKind::cityblock);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) CHECK(zeros(i, j) == 0);

    const auto inf = init_distance_map(BinaryImage(3, 3), DistanceKind::squared_euclidean);
    CHECK(inf.all_infinite());
    // marker strictly exceeds the kind's reachable bound (here 4 + 4 = 8)
    CHECK(DistanceMap::kInfinity > kind_bound(DistanceKind::squared_euclidean, 3, 3));
}

TEST_CASE("sentinel exceeds every transform output on random inputs") {
    for (std::uint64_t seed : {11u, 12u, 13u}) {
        const auto img = generate_random_image(40, 56, 0.05, seed);
        const auto dm = cityblock_sequential(img);
        const auto bound = kind_bound(DistanceKind::cityblock, 40, 56);
        for (std::size_t i = 0; i < dm.rows(); ++i)
            for (std::size_t j = 0; j < dm.cols(); ++j)
                CHECK(dm(i, j) <= bound);
    }
}

TEST_CASE("to_gray linear levels") {
    BinaryImage img(1, 5);
    img.set_object(0, 0);
    DistanceMap dm(1, 5, DistanceKind::cityblock);
    for (std::size_t j = 0; j < 5; ++j) dm(0, j) = j;  // 0..4
    const auto gray = to_gray(dm, GrayMapping::linear);
    const std::uint8_t want[] = {0, 64, 128, 191, 255};
    for (std::size_t j = 0; j < 5; ++j) CHECK(gray(0, j) == want[j]);
}

TEST_CASE("to_gray degenerate maps") {
    DistanceMap zero(2, 2, DistanceKind::cityblock);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) zero(i, j) = 0;
    const auto gray = to_gray(zero, GrayMapping::linear);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) CHECK(gray(i, j) == 0);

    DistanceMap two(1, 2, DistanceKind::squared_euclidean);
    two(0, 0) = 0;
    two(0, 1) = 1;
    const auto g2 = to_gray(two, GrayMapping::sqrt_linear);
    CHECK(g2(0, 0) == 0);
    CHECK(g2(0, 1) == 255);

    const DistanceMap allinf(2, 2, DistanceKind::squared_euclidean);
    CHECK_THROWS_WITH_AS(static_cast<void>(to_gray(allinf, GrayMapping::linear)),
                         doctest::Contains("no features"), std::domain_error);
}

TEST_CASE("to_gray is monotone") {
    Xorshift64Star rng(99);
    DistanceMap dm(8, 8, DistanceKind::squared_euclidean);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) dm(i, j) = rng.next() % 1000;
    for (auto mode : {GrayMapping::linear, GrayMapping::sqrt_linear}) {
        const auto gray = to_gray(dm, mode);
        for (std::size_t a = 0; a < 64; ++a)
            for (std::size_t b = 0; b < 64; ++b) {
                const auto va = dm(a / 8, a % 8), vb = dm(b / 8, b % 8);
                if (va <= vb) CHECK(gray(a / 8, a % 8) <= gray(b / 8, b % 8));
            }
    }
}

TEST_CASE("text dump format") {
    DistanceMap dm(2, 3, DistanceKind::cityblock);
    dm(0, 0) = 0;
    dm(0, 1) = 7;
    dm(1, 2) = 12;
    CHECK(to_text(dm) == "0 7 inf\ninf inf 12\n");

    Grid<double> m(1, 3);
    m(0, 0) = 1.7777777;
    m(0, 1) = 4.0;
    m(0, 2) = 16.0 / 9.0;
    CHECK(to_text(m) == "1.8 4 1.8\n");
}

TEST_CASE("labels render to distinct gray levels") {
    LabelMap labels(1, 4);
    for (std::size_t j = 0; j < 4; ++j) labels(0, j) = static_cast<std::uint32_t>(j);
    const auto gray = labels_to_gray(labels, 4);
    CHECK(gray(0, 0) == 0);
    CHECK(gray(0, 1) == 64);
    CHECK(gray(0, 2) == 128);
    CHECK(gray(0, 3) == 191);
}
