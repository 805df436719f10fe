#include "geez/pnm.hpp"

#include <fstream>
#include <string>

#include "geez/imaging.hpp"

namespace geez {

namespace {

// Skips PNM whitespace and '#' comments, then reads one unsigned decimal
// token. `pos` tracks the byte offset for error reporting.
long read_token(std::istream& in, long long& pos, const char* what) {
    int c = in.get();
    ++pos;
    while (in) {
        if (c == '#') {
            while (in && c != '\n') {
                c = in.get();
                ++pos;
            }
        } else if (std::isspace(c)) {
            c = in.get();
            ++pos;
        } else {
            break;
        }
    }
    if (!in || !std::isdigit(c))
        throw FormatError(std::string("pnm: expected ") + what, pos - 1);
    long value = 0;
    while (in && std::isdigit(c)) {
        value = value * 10 + (c - '0');
        if (value > 1000000) throw FormatError(std::string("pnm: ") + what + " out of range", pos - 1);
        c = in.get();
        ++pos;
    }
    if (in) {
        in.unget();
        --pos;
    }
    return value;
}

void read_header(std::istream& in, long long& pos, int& rows, int& cols, int& maxval) {
    const long w = read_token(in, pos, "width");
    const long h = read_token(in, pos, "height");
    maxval = static_cast<int>(read_token(in, pos, "maxval"));
    if (w < 1 || h < 1) throw FormatError("pnm: empty raster", pos);
    if (maxval != 255) throw FormatError("pnm: maxval must be 255, got " + std::to_string(maxval), pos);
    rows = static_cast<int>(h);
    cols = static_cast<int>(w);
}

void read_raster_binary(std::istream& in, long long& pos, std::vector<std::uint8_t>& out,
                        std::size_t count) {
    // Exactly one whitespace byte separates maxval from the raster.
    const int sep = in.get();
    ++pos;
    if (!in || !std::isspace(sep)) throw FormatError("pnm: missing raster separator", pos - 1);
    out.resize(count);
    in.read(reinterpret_cast<char*>(out.data()), static_cast<std::streamsize>(count));
    if (static_cast<std::size_t>(in.gcount()) != count)
        throw FormatError("pnm: truncated raster, expected " + std::to_string(count) +
                              " bytes, got " + std::to_string(in.gcount()),
                          pos + in.gcount());
}

void read_raster_ascii(std::istream& in, long long& pos, std::vector<std::uint8_t>& out,
                       std::size_t count) {
    out.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
        const long v = read_token(in, pos, "sample");
        if (v > 255) throw FormatError("pnm: sample exceeds maxval", pos);
        out[i] = static_cast<std::uint8_t>(v);
    }
}

} // namespace

PnmImage read_pnm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("pnm: cannot open " + path.string());

    long long pos = 0;
    char magic[2] = {0, 0};
    in.read(magic, 2);
    pos += in.gcount();
    if (in.gcount() != 2 || magic[0] != 'P') throw FormatError("pnm: bad magic", 0);

    int rows = 0, cols = 0, maxval = 0;
    switch (magic[1]) {
        case '2': {
            read_header(in, pos, rows, cols, maxval);
            GrayImage img(rows, cols);
            read_raster_ascii(in, pos, img.pixels, img.size());
            return img;
        }
        case '5': {
            read_header(in, pos, rows, cols, maxval);
            GrayImage img(rows, cols);
            read_raster_binary(in, pos, img.pixels, img.size());
            return img;
        }
        case '3': {
            read_header(in, pos, rows, cols, maxval);
            RgbImage img(rows, cols);
            read_raster_ascii(in, pos, img.pixels, img.pixels.size());
            return img;
        }
        case '6': {
            read_header(in, pos, rows, cols, maxval);
            RgbImage img(rows, cols);
            read_raster_binary(in, pos, img.pixels, img.pixels.size());
            return img;
        }
        default:
            throw FormatError(std::string("pnm: unsupported type P") + magic[1], 1);
    }
}

GrayImage read_pnm_gray(const std::filesystem::path& path) {
    PnmImage img = read_pnm(path);
    if (std::holds_alternative<GrayImage>(img)) return std::get<GrayImage>(std::move(img));
    return to_grayscale(std::get<RgbImage>(img));
}

void write_pgm(const std::filesystem::path& path, const GrayImage& img) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("pnm: cannot write " + path.string());
    out << "P5\n" << img.cols << " " << img.rows << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.pixels.data()),
              static_cast<std::streamsize>(img.size()));
    if (!out) throw FormatError("pnm: write failed for " + path.string());
}

void write_pgm_ascii(const std::filesystem::path& path, const GrayImage& img) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("pnm: cannot write " + path.string());
    out << "P2\n" << img.cols << " " << img.rows << "\n255\n";
    for (int r = 0; r < img.rows; ++r) {
        for (int c = 0; c < img.cols; ++c) {
            out << static_cast<int>(img.at(r, c)) << (c + 1 == img.cols ? '\n' : ' ');
        }
    }
    if (!out) throw FormatError("pnm: write failed for " + path.string());
}

} // namespace geez
