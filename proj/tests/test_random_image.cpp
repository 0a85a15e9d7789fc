#include <doctest.h>

#include "distfield/random_image.hpp"

using namespace distfield;

TEST_CASE("density extremes") {
    CHECK(generate_random_image(8, 8, 0.0, 3).object_count() == 0);
    CHECK(generate_random_image(8, 8, 1.0, 3).object_count() == 64);
    CHECK_THROWS_AS(static_cast<void>(generate_random_image(8, 8, 1.5, 3)),
                    std::invalid_argument);
}

TEST_CASE("same seed, same image") {
    const auto a = generate_random_image(64, 64, 0.02, 1);
    const auto b = generate_random_image(64, 64, 0.02, 1);
    CHECK(a == b);
    const auto c = generate_random_image(64, 64, 0.02, 2);
    CHECK(a != c);
}

TEST_CASE("feature count tracks density") {
    const auto img = generate_random_image(128, 128, 0.02, 9);
    const double expected = 0.02 * 128 * 128;  // ~328
    CHECK(double(img.object_count()) > expected * 0.6);
    CHECK(double(img.object_count()) < expected * 1.4);
}
