#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ctstreak/image.hpp"

namespace ctstreak {

// CTT1 container: magic "CTT1", u32 LE rank, rank u32 LE dims, then the
// payload as 32-bit LE IEEE-754 floats, row-major.
struct Ctt1 {
  std::vector<std::uint32_t> dims;
  std::vector<double> values;  // widened from the stored f32
};

void write_ctt1(const std::string& path, std::span<const std::uint32_t> dims,
                std::span<const double> values);
Ctt1 read_ctt1(const std::string& path);

// Images are stored rank-2 as [height, width]; sinograms as
// [n_angles, n_detectors]. Loaded sinograms get the equiangular [0, pi)
// angle grid and unit spacing.
void write_ctt1(const std::string& path, const Image& image);
void write_ctt1(const std::string& path, const Sinogram& sinogram);
Image read_ctt1_image(const std::string& path);
Sinogram read_ctt1_sinogram(const std::string& path);

// Writes via a temp file in the same directory, then renames into place.
void write_file_atomic(const std::string& path, const void* bytes, std::size_t size);
void write_file_atomic(const std::string& path, const std::string& text);

}  // namespace ctstreak
