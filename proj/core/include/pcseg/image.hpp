#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "pcseg/errors.hpp"

namespace pcseg {

/// Raster image with 8- or 16-bit samples and 1 (gray) or 3 (RGB) channels.
/// Samples are row-major and channel-interleaved.
struct RasterImage {
    int width = 0;
    int height = 0;
    int depth = 8;    ///< bits per sample: 8 or 16
    int channels = 1; ///< 1 or 3
    std::vector<std::uint16_t> samples;

    int maxValue() const { return depth == 8 ? 255 : 65535; }
    int grayLevels() const { return depth == 8 ? 256 : 65536; }
    std::size_t pixelCount() const {
        return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    }

    std::uint16_t at(int x, int y, int c = 0) const {
        return samples[(static_cast<std::size_t>(y) * static_cast<std::size_t>(width) +
                        static_cast<std::size_t>(x)) *
                           static_cast<std::size_t>(channels) +
                       static_cast<std::size_t>(c)];
    }
};

/// Gray image helper used across tests and tools.
RasterImage makeGrayImage(int width, int height, std::vector<std::uint16_t> samples, int depth = 8);

/// Decodes a binary portable graymap ("P5") or pixmap ("P6"). Header
/// comments are honored; ASCII variants are rejected. Throws FormatError on
/// a bad magic, malformed header, out-of-range maxval or truncated payload.
RasterImage readPnm(std::span<const std::uint8_t> bytes);

/// Encodes to the canonical binary form: "P5\n{w} {h}\n{maxval}\n" (or P6)
/// followed by raw samples, big-endian for 16-bit depth.
std::vector<std::uint8_t> writePnm(const RasterImage& img);

RasterImage loadPnm(const std::filesystem::path& path);
void savePnm(const std::filesystem::path& path, const RasterImage& img);

} // namespace pcseg
