#pragma once

#include <string>
#include <vector>

#include "ctstreak/image.hpp"

namespace ctstreak {

// Decodes an 8- or 16-bit grayscale or RGB(A) PNG to a grayscale image in
// [0, 1] (luma conversion for color, division by the full sample range).
// Throws std::runtime_error on I/O or decode failure.
Image read_png_grayscale(const std::string& path);

// 8-bit grayscale export with min-max windowing; a flat image maps to 0.
void write_png(const std::string& path, const Image& image);

// Loads a PNG, converts to grayscale, bilinearly resizes to size x size, and
// rescales to [0, 1]. size must be >= 1.
Image ingest_image(const std::string& path, int size);

// Bilinear resample with pixel-center alignment.
Image resize_bilinear(const Image& src, int width, int height);

// Side-by-side panels (input | output | target per row), min-max windowed
// over each panel independently.
void write_comparison_grid(const std::string& path,
                           const std::vector<std::vector<const Image*>>& rows);

}  // namespace ctstreak
