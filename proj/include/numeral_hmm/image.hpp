#ifndef NUMERAL_HMM_IMAGE_HPP
#define NUMERAL_HMM_IMAGE_HPP

#include <compare>
#include <cstdint>
#include <vector>

#include "numeral_hmm/errors.hpp"

namespace numeral_hmm {

// Pixel coordinate, (row, col) with rows increasing downward.
// Ordering is lexicographic, which the traversal rules rely on.
struct Pixel {
    int row = 0;
    int col = 0;
    auto operator<=>(const Pixel&) const = default;
};

// Row-major grayscale raster, intensities in [0, 255].
class GrayImage {
public:
    GrayImage() = default;
    GrayImage(int width, int height, std::uint8_t fill = 0)
        : width_(width), height_(height),
          pixels_(static_cast<std::size_t>(width) * height, fill) {
        if (width < 1 || height < 1) throw Error("GrayImage: width and height must be >= 1");
    }
    GrayImage(int width, int height, std::vector<std::uint8_t> pixels)
        : width_(width), height_(height), pixels_(std::move(pixels)) {
        if (width < 1 || height < 1) throw Error("GrayImage: width and height must be >= 1");
        if (pixels_.size() != static_cast<std::size_t>(width) * height)
            throw Error("GrayImage: pixel count does not match dimensions");
    }

    int width() const { return width_; }
    int height() const { return height_; }
    std::uint8_t at(int row, int col) const {
        return pixels_[static_cast<std::size_t>(row) * width_ + col];
    }
    std::uint8_t& at(int row, int col) {
        return pixels_[static_cast<std::size_t>(row) * width_ + col];
    }
    const std::vector<std::uint8_t>& pixels() const { return pixels_; }

    bool operator==(const GrayImage&) const = default;

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<std::uint8_t> pixels_;
};

// Row-major binary raster; nonzero = foreground ink.
class BinaryImage {
public:
    BinaryImage() = default;
    BinaryImage(int width, int height, std::uint8_t fill = 0)
        : width_(width), height_(height),
          pixels_(static_cast<std::size_t>(width) * height, fill ? 1 : 0) {
        if (width < 1 || height < 1) throw Error("BinaryImage: width and height must be >= 1");
    }

    int width() const { return width_; }
    int height() const { return height_; }
    bool in_bounds(int row, int col) const {
        return row >= 0 && row < height_ && col >= 0 && col < width_;
    }
    // Out-of-bounds reads are background.
    bool at(int row, int col) const {
        return in_bounds(row, col) && pixels_[static_cast<std::size_t>(row) * width_ + col] != 0;
    }
    bool at(Pixel p) const { return at(p.row, p.col); }
    void set(int row, int col, bool value) {
        pixels_[static_cast<std::size_t>(row) * width_ + col] = value ? 1 : 0;
    }
    void set(Pixel p, bool value) { set(p.row, p.col, value); }

    const std::vector<std::uint8_t>& pixels() const { return pixels_; }

    int count_foreground() const {
        int n = 0;
        for (auto v : pixels_) n += v != 0;
        return n;
    }

    bool operator==(const BinaryImage&) const = default;

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<std::uint8_t> pixels_;
};

// A binary raster with unit stroke width: the fixpoint of thin().
// Constructed by thin(); tests may wrap hand-built rasters directly.
struct Skeleton {
    BinaryImage image;
    bool operator==(const Skeleton&) const = default;
};

}  // namespace numeral_hmm

#endif
