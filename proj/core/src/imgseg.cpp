#include "unisplit/imgseg.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>

#include "unisplit/io.hpp"

namespace unisplit {

std::uint8_t luma(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
    return static_cast<std::uint8_t>((299u * r + 587u * g + 114u * b + 500u) / 1000u);
}

GrayImage to_gray(const RgbImage& img) {
    if (img.pixels.size() != 3 * img.width * img.height) throw Error("malformed image");
    GrayImage out{img.width, img.height, std::vector<std::uint8_t>(img.width * img.height)};
    for (std::size_t i = 0; i < out.pixels.size(); ++i) {
        out.pixels[i] = luma(img.pixels[3 * i], img.pixels[3 * i + 1], img.pixels[3 * i + 2]);
    }
    return out;
}

namespace {

struct PnmHeader {
    char kind = 0;  // '5' or '6'
    std::size_t width = 0;
    std::size_t height = 0;
    std::size_t data_offset = 0;
};

PnmHeader parse_header(const std::string& bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '5' && bytes[1] != '6')) {
        throw Error("malformed image: expected binary PGM (P5) or PPM (P6)");
    }
    PnmHeader h;
    h.kind = bytes[1];
    std::size_t pos = 2;
    std::array<std::size_t, 3> fields{};
    for (std::size_t& field : fields) {
        for (;;) {
            while (pos < bytes.size() && std::isspace(static_cast<unsigned char>(bytes[pos]))) ++pos;
            if (pos < bytes.size() && bytes[pos] == '#') {
                while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
                continue;
            }
            break;
        }
        if (pos >= bytes.size() || !std::isdigit(static_cast<unsigned char>(bytes[pos]))) {
            throw Error("malformed image: bad header");
        }
        std::size_t v = 0;
        while (pos < bytes.size() && std::isdigit(static_cast<unsigned char>(bytes[pos]))) {
            v = v * 10 + static_cast<std::size_t>(bytes[pos] - '0');
            if (v > (1u << 30)) throw Error("malformed image: header value too large");
            ++pos;
        }
        field = v;
    }
    if (pos >= bytes.size() || !std::isspace(static_cast<unsigned char>(bytes[pos]))) {
        throw Error("malformed image: bad header");
    }
    h.width = fields[0];
    h.height = fields[1];
    if (h.width == 0 || h.height == 0) throw Error("malformed image: zero size");
    if (fields[2] != 255) throw Error("malformed image: only maxval 255 is supported");
    h.data_offset = pos + 1;
    const std::size_t channels = h.kind == '6' ? 3 : 1;
    if (bytes.size() - h.data_offset < channels * h.width * h.height) throw Error("malformed image: truncated pixel data");
    return h;
}

std::vector<std::uint8_t> pixel_bytes(const std::string& bytes, std::size_t offset, std::size_t count) {
    const auto* p = reinterpret_cast<const std::uint8_t*>(bytes.data()) + offset;
    return {p, p + count};
}

}  // namespace

GrayImage parse_pnm(const std::string& bytes) {
    const PnmHeader h = parse_header(bytes);
    if (h.kind == '5') return {h.width, h.height, pixel_bytes(bytes, h.data_offset, h.width * h.height)};
    return to_gray(RgbImage{h.width, h.height, pixel_bytes(bytes, h.data_offset, 3 * h.width * h.height)});
}

GrayImage read_pgm(const std::string& path) {
    const std::string bytes = read_text(path);
    const PnmHeader h = parse_header(bytes);
    if (h.kind != '5') throw Error("malformed image: expected PGM (P5)");
    return {h.width, h.height, pixel_bytes(bytes, h.data_offset, h.width * h.height)};
}

RgbImage read_ppm(const std::string& path) {
    const std::string bytes = read_text(path);
    const PnmHeader h = parse_header(bytes);
    if (h.kind != '6') throw Error("malformed image: expected PPM (P6)");
    return {h.width, h.height, pixel_bytes(bytes, h.data_offset, 3 * h.width * h.height)};
}

GrayImage read_image(const std::string& path) { return parse_pnm(read_text(path)); }

std::string encode_pgm(const GrayImage& img) {
    if (img.pixels.size() != img.width * img.height) throw Error("malformed image");
    std::string out = "P5\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
    out.append(reinterpret_cast<const char*>(img.pixels.data()), img.pixels.size());
    return out;
}

void write_pgm(const GrayImage& img, const std::string& path) { write_text_atomic(path, encode_pgm(img)); }

Segmentation segment(const GrayImage& img, double alpha) {
    if (img.pixels.empty() || img.pixels.size() != img.width * img.height) throw Error("malformed image");
    std::array<std::uint64_t, 256> hist{};
    for (std::uint8_t p : img.pixels) ++hist[p];
    std::vector<double> values;
    std::vector<std::uint64_t> weights;
    for (int v = 0; v < 256; ++v) {
        if (hist[v] == 0) continue;
        values.push_back(v);
        weights.push_back(hist[v]);
    }
    const Dataset data = Dataset::from_weighted(std::move(values), std::move(weights), 1.0);
    SplitResult sr = split(data, alpha);

    Segmentation out;
    out.thresholds = sr.valley_points;
    std::array<int, 256> label_of{};
    for (int v = 0; v < 256; ++v) label_of[v] = sr.label_of(v);
    out.segments.resize(sr.k());
    std::vector<double> sums(sr.k(), 0.0);
    for (auto& s : out.segments) {
        s.min = 255;
        s.max = 0;
    }
    out.labels.resize(img.pixels.size());
    for (std::size_t i = 0; i < img.pixels.size(); ++i) {
        const int p = img.pixels[i];
        const int l = label_of[p];
        out.labels[i] = l;
        auto& s = out.segments[static_cast<std::size_t>(l)];
        ++s.pixels;
        sums[static_cast<std::size_t>(l)] += p;
        s.min = std::min(s.min, p);
        s.max = std::max(s.max, p);
    }
    for (std::size_t j = 0; j < out.segments.size(); ++j) {
        out.segments[j].mean = sums[j] / static_cast<double>(out.segments[j].pixels);
    }
    return out;
}

GrayImage recolor(const GrayImage& img, const std::vector<int>& labels) {
    if (labels.size() != img.pixels.size()) throw Error("labels do not cover the image");
    std::vector<double> sums;
    std::vector<std::uint64_t> counts;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] < 0) throw Error("negative label");
        const auto l = static_cast<std::size_t>(labels[i]);
        if (l >= sums.size()) {
            sums.resize(l + 1, 0.0);
            counts.resize(l + 1, 0);
        }
        sums[l] += img.pixels[i];
        ++counts[l];
    }
    GrayImage out = img;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const auto l = static_cast<std::size_t>(labels[i]);
        out.pixels[i] = static_cast<std::uint8_t>(std::floor(sums[l] / static_cast<double>(counts[l]) + 0.5));
    }
    return out;
}

}  // namespace unisplit
