#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "distfield/grid.hpp"

namespace distfield {

// Netpbm conventions used throughout: PBM bit 1 = black = object pixel,
// header order is "<cols> <rows>".

class NetpbmError : public std::runtime_error {
public:
    NetpbmError(const std::string& what, std::size_t byte_offset)
        : std::runtime_error(what + " (byte offset " + std::to_string(byte_offset) + ")"),
          byte_offset_(byte_offset) {}

    std::size_t byte_offset() const { return byte_offset_; }

private:
    std::size_t byte_offset_;
};

enum class PbmVariant : std::uint8_t { plain /* P1 */, raw /* P4 */ };
enum class PgmVariant : std::uint8_t { plain /* P2 */, raw /* P5 */ };

// Accepts P1 and P4 bitmaps.
BinaryImage read_netpbm(std::string_view bytes);

std::string write_netpbm(const BinaryImage& img, PbmVariant variant);
std::string write_netpbm(const GrayImage& img, PgmVariant variant);

}  // namespace distfield
