#pragma once

#include <cstddef>
#include <numbers>
#include <vector>

namespace ctstreak {

// 2D attenuation map, row-major (height rows of width values).
struct Image {
  int width = 0;
  int height = 0;
  double pixel_size = 1.0;
  std::vector<double> data;

  Image() = default;
  Image(int width, int height, double fill = 0.0);

  double& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
  double at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
  std::size_t size() const { return data.size(); }
};

// Projection data, row-major [angle][detector].
struct Sinogram {
  int n_angles = 0;
  int n_detectors = 0;
  std::vector<double> angles;  // radians, strictly increasing in [0, pi)
  double detector_spacing = 1.0;
  std::vector<double> data;

  Sinogram() = default;
  Sinogram(int n_angles, int n_detectors, double fill = 0.0);

  double& at(int a, int d) { return data[static_cast<std::size_t>(a) * n_detectors + d]; }
  double at(int a, int d) const { return data[static_cast<std::size_t>(a) * n_detectors + d]; }
  std::size_t size() const { return data.size(); }
};

// Parallel-beam acquisition description. Angle k sits at the start of its
// equiangular bin: k * angular_span / n_angles.
struct Geometry {
  int n_angles = 0;
  double angular_span = std::numbers::pi;
  int n_detectors = 0;
  double detector_spacing = 1.0;
  int image_width = 0;
  int image_height = 0;
  double pixel_size = 1.0;

  double angle(int k) const { return k * angular_span / n_angles; }
  std::vector<double> angles() const;
};

// Equiangular geometry over [0, pi), detector row centered on the rotation
// axis, unit pixel and detector spacing. Throws std::invalid_argument on
// non-positive counts.
Geometry make_parallel_geometry(int n_angles, int n_detectors, int image_size);

// Zero-filled sinogram matching the geometry's angular grid.
Sinogram make_sinogram(const Geometry& geometry, double fill = 0.0);

// Throw std::invalid_argument if any value is NaN or infinite.
void check_finite(const Image& image);
void check_finite(const Sinogram& sinogram);

}  // namespace ctstreak
