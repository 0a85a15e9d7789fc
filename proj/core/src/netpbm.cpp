#include "distfield/netpbm.hpp"

namespace distfield {

namespace {

constexpr std::size_t kMaxSide = std::size_t{1} << 24;

class Cursor {
public:
    explicit Cursor(std::string_view bytes) : bytes_(bytes) {}

    std::size_t offset() const { return pos_; }
    bool eof() const { return pos_ >= bytes_.size(); }

    char peek() const { return bytes_[pos_]; }
    char take() { return bytes_[pos_++]; }

    [[noreturn]] void fail(const std::string& what) const { throw NetpbmError(what, pos_); }

    // Whitespace and '#' comments between header tokens.
    void skip_separators() {
        while (!eof()) {
            const char c = peek();
            if (c == '#') {
                while (!eof() && take() != '\n') {
                }
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                ++pos_;
            } else {
                break;
            }
        }
    }

    std::size_t read_dimension(const char* name) {
        skip_separators();
        if (eof()) fail(std::string("missing ") + name);
        if (peek() < '0' || peek() > '9') fail(std::string("malformed ") + name);
        std::size_t value = 0;
        while (!eof() && peek() >= '0' && peek() <= '9') {
            value = value * 10 + static_cast<std::size_t>(take() - '0');
            if (value > kMaxSide) fail(std::string(name) + " overflows supported range");
        }
        return value;
    }

private:
    std::string_view bytes_;
    std::size_t pos_ = 0;
};

}  // namespace

BinaryImage read_netpbm(std::string_view bytes) {
    Cursor cur(bytes);
    if (bytes.size() < 2 || bytes[0] != 'P') cur.fail("malformed magic, expected P1 or P4");
    const char variant = bytes[1];
    if (variant != '1' && variant != '4') cur.fail("unsupported magic, expected P1 or P4");
    cur.take();
    cur.take();

    const std::size_t cols = cur.read_dimension("width");
    const std::size_t rows = cur.read_dimension("height");
    if (cols == 0 || rows == 0) cur.fail("image dimensions must be positive");

    BinaryImage img(rows, cols);
    if (variant == '1') {
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) {
                cur.skip_separators();
                if (cur.eof()) cur.fail("truncated P1 raster");
                const char c = cur.take();
                if (c != '0' && c != '1') cur.fail("invalid P1 raster digit");
                img.set_object(i, j, c == '1');
            }
        }
    } else {
        // Raw raster starts after exactly one whitespace character; rows are
        // packed MSB-first and padded to a whole byte.
        if (cur.eof()) cur.fail("truncated P4 header");
        const char sep = cur.take();
        if (sep != ' ' && sep != '\t' && sep != '\r' && sep != '\n')
            cur.fail("malformed P4 header separator");
        const std::size_t row_bytes = (cols + 7) / 8;
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t b = 0; b < row_bytes; ++b) {
                if (cur.eof()) cur.fail("truncated P4 raster");
                const auto byte = static_cast<unsigned char>(cur.take());
                for (std::size_t bit = 0; bit < 8; ++bit) {
                    const std::size_t j = b * 8 + bit;
                    if (j >= cols) break;
                    img.set_object(i, j, (byte >> (7 - bit)) & 1);
                }
            }
        }
    }
    return img;
}

std::string write_netpbm(const BinaryImage& img, PbmVariant variant) {
    std::string out;
    out += (variant == PbmVariant::plain) ? "P1\n" : "P4\n";
    out += std::to_string(img.cols()) + ' ' + std::to_string(img.rows()) + '\n';
    if (variant == PbmVariant::plain) {
        for (std::size_t i = 0; i < img.rows(); ++i) {
            for (std::size_t j = 0; j < img.cols(); ++j)
                out += img.is_object(i, j) ? '1' : '0';
            out += '\n';
        }
    } else {
        const std::size_t row_bytes = (img.cols() + 7) / 8;
        for (std::size_t i = 0; i < img.rows(); ++i) {
            for (std::size_t b = 0; b < row_bytes; ++b) {
                unsigned char byte = 0;
                for (std::size_t bit = 0; bit < 8; ++bit) {
                    const std::size_t j = b * 8 + bit;
                    if (j < img.cols() && img.is_object(i, j)) byte |= 1u << (7 - bit);
                }
                out += static_cast<char>(byte);
            }
        }
    }
    return out;
}

std::string write_netpbm(const GrayImage& img, PgmVariant variant) {
    std::string out;
    out += (variant == PgmVariant::plain) ? "P2\n" : "P5\n";
    out += std::to_string(img.cols()) + ' ' + std::to_string(img.rows()) + "\n255\n";
    if (variant == PgmVariant::plain) {
        for (std::size_t i = 0; i < img.rows(); ++i) {
            for (std::size_t j = 0; j < img.cols(); ++j) {
                if (j) out += ' ';
                out += std::to_string(img(i, j));
            }
            out += '\n';
        }
    } else {
        for (std::size_t i = 0; i < img.rows(); ++i)
            for (std::size_t j = 0; j < img.cols(); ++j)
                out += static_cast<char>(img(i, j));
    }
    return out;
}

}  // namespace distfield
