#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "unisplit/split.hpp"

namespace unisplit {

/// 8-bit grayscale image, row-major.
struct GrayImage {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<std::uint8_t> pixels;

    friend bool operator==(const GrayImage&, const GrayImage&) = default;
};

/// 8-bit RGB image, row-major interleaved triplets.
struct RgbImage {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<std::uint8_t> pixels;
};

/// Luma 0.299 R + 0.587 G + 0.114 B rounded half up, in exact integer arithmetic.
std::uint8_t luma(std::uint8_t r, std::uint8_t g, std::uint8_t b);
GrayImage to_gray(const RgbImage& img);

/// Binary PGM (P5) / PPM (P6) with maxval 255; header comments are skipped.
GrayImage read_pgm(const std::string& path);
RgbImage read_ppm(const std::string& path);
/// Reads P5 directly or converts P6 to gray.
GrayImage read_image(const std::string& path);
GrayImage parse_pnm(const std::string& bytes);
std::string encode_pgm(const GrayImage& img);
void write_pgm(const GrayImage& img, const std::string& path);

struct SegmentStats {
    std::uint64_t pixels = 0;
    double mean = 0.0;
    int min = 0;
    int max = 0;
};

struct Segmentation {
    std::vector<double> thresholds;
    /// Segment index per pixel.
    std::vector<int> labels;
    std::vector<SegmentStats> segments;

    std::size_t k() const noexcept { return segments.size(); }
};

/// Splits the intensity histogram into unimodal groups; the valley points are
/// the thresholds between segments.
Segmentation segment(const GrayImage& img, double alpha = 0.01);

/// Replaces each pixel by the rounded mean intensity of its segment.
GrayImage recolor(const GrayImage& img, const std::vector<int>& labels);

}  // namespace unisplit
