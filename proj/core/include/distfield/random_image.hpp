#pragma once

#include <cstdint>

#include "distfield/grid.hpp"

namespace distfield {

// xorshift64* generator: 64-bit xorshift state followed by an odd-constant
// multiply. Deterministic across platforms, which keeps generated workloads
// reproducible byte for byte.
class Xorshift64Star {
public:
    explicit Xorshift64Star(std::uint64_t seed)
        : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545f4914f6cdd1dULL;
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

// Each cell becomes an object pixel independently with the given probability.
BinaryImage generate_random_image(std::size_t rows, std::size_t cols, double density,
                                  std::uint64_t seed);

}  // namespace distfield
