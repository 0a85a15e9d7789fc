#include "distfield/random_image.hpp"

namespace distfield {

BinaryImage generate_random_image(std::size_t rows, std::size_t cols, double density,
                                  std::uint64_t seed) {
    if (!(density >= 0.0) || !(density <= 1.0))
        throw std::invalid_argument("density must lie in [0, 1]");
    Xorshift64Star rng(seed);
    BinaryImage img(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            img.set_object(i, j, rng.next_unit() < density);
    return img;
}

}  // namespace distfield
