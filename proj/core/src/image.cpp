#include <umthresh/image.hpp>
#include <umthresh/errors.hpp>

#include <cctype>
#include <fstream>

namespace umthresh {

namespace {

int bit_depth_for_maxval(int maxval) {
    int depth = 1;
    while ((1 << depth) - 1 < maxval) ++depth;
    return depth;
}

// Token scanner over the PGM header. Tracks the byte offset for error messages.
struct Scanner {
    const std::vector<unsigned char>& bytes;
    std::size_t pos = 0;

    bool eof() const { return pos >= bytes.size(); }

    void skip_separators() {
        while (!eof()) {
            unsigned char c = bytes[pos];
            if (c == '#') {
                while (!eof() && bytes[pos] != '\n') ++pos;
            } else if (std::isspace(c)) {
                ++pos;
            } else {
                break;
            }
        }
    }

    int read_number(const char* what) {
        skip_separators();
        if (eof())
            raise(Errc::TruncatedData,
                  std::string("expected ") + what + " at byte offset " + std::to_string(pos));
        if (!std::isdigit(bytes[pos]))
            raise(Errc::MalformedHeader,
                  std::string("expected ") + what + " at byte offset " + std::to_string(pos));
        long value = 0;
        while (!eof() && std::isdigit(bytes[pos])) {
            value = value * 10 + (bytes[pos] - '0');
            if (value > 1000000) break; // enough to report out-of-range values
            ++pos;
        }
        while (!eof() && std::isdigit(bytes[pos])) ++pos;
        return static_cast<int>(value);
    }
};

} // namespace

GrayImage make_image(int width, int height, int bit_depth, std::vector<std::uint8_t> pixels) {
    if (width < 1 || height < 1)
        raise(Errc::InvalidArgument, "image dimensions must be >= 1");
    if (bit_depth < 1 || bit_depth > 8)
        raise(Errc::InvalidArgument, "bit depth must be in 1..8");
    if (pixels.size() != static_cast<std::size_t>(width) * height)
        raise(Errc::InvalidArgument, "pixel count does not match width x height");
    const int maxval = (1 << bit_depth) - 1;
    for (std::size_t i = 0; i < pixels.size(); ++i) {
        if (pixels[i] > maxval)
            raise(Errc::InvalidArgument,
                  "pixel " + std::to_string(i) + " exceeds 2^bit_depth - 1");
    }
    return GrayImage{width, height, bit_depth, std::move(pixels)};
}

GrayImage parse_pgm(const std::vector<unsigned char>& bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5'))
        raise(Errc::MalformedHeader, "missing P2/P5 magic at byte offset 0");
    const bool binary = bytes[1] == '5';

    Scanner sc{bytes, 2};
    const int width = sc.read_number("width");
    const int height = sc.read_number("height");
    if (width < 1 || height < 1)
        raise(Errc::MalformedHeader, "nonpositive dimensions at byte offset " +
                                         std::to_string(sc.pos));
    const std::size_t maxval_pos = sc.pos;
    const int maxval = sc.read_number("maxval");
    if (maxval < 1 || maxval > 255)
        raise(Errc::MaxvalOutOfRange, "maxval " + std::to_string(maxval) +
                                          " at byte offset " + std::to_string(maxval_pos) +
                                          " (supported range 1..255)");

    const std::size_t count = static_cast<std::size_t>(width) * height;
    std::vector<std::uint8_t> pixels(count);

    if (binary) {
        // Exactly one whitespace byte separates the header from raster data.
        if (sc.eof() || !std::isspace(bytes[sc.pos]))
            raise(Errc::MalformedHeader,
                  "expected whitespace before raster at byte offset " + std::to_string(sc.pos));
        std::size_t data = sc.pos + 1;
        if (bytes.size() - data < count)
            raise(Errc::TruncatedData,
                  "raster ends at byte offset " + std::to_string(bytes.size()) + ", need " +
                      std::to_string(count) + " samples from offset " + std::to_string(data));
        for (std::size_t i = 0; i < count; ++i) {
            unsigned char v = bytes[data + i];
            if (v > maxval)
                raise(Errc::MalformedHeader, "sample " + std::to_string(static_cast<int>(v)) +
                                                 " above maxval at byte offset " +
                                                 std::to_string(data + i));
            pixels[i] = v;
        }
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            const std::size_t at = sc.pos;
            const int v = sc.read_number("pixel value");
            if (v > maxval)
                raise(Errc::MalformedHeader, "sample " + std::to_string(v) +
                                                 " above maxval at byte offset " +
                                                 std::to_string(at));
            pixels[i] = static_cast<std::uint8_t>(v);
        }
    }

    return GrayImage{width, height, bit_depth_for_maxval(maxval), std::move(pixels)};
}

std::vector<unsigned char> encode_pgm(const GrayImage& img) {
    std::string header = "P5\n" + std::to_string(img.width) + " " + std::to_string(img.height) +
                         "\n" + std::to_string(img.max_value()) + "\n";
    std::vector<unsigned char> out(header.begin(), header.end());
    out.insert(out.end(), img.pixels.begin(), img.pixels.end());
    return out;
}

GrayImage load_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        raise(Errc::IoFailure, "cannot open " + path);
    std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                     std::istreambuf_iterator<char>());
    return parse_pgm(bytes);
}

void save_pgm(const GrayImage& img, const std::string& path) {
    const auto bytes = encode_pgm(img);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        raise(Errc::IoFailure, "cannot open " + path + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out)
        raise(Errc::IoFailure, "short write to " + path);
}

} // namespace umthresh
