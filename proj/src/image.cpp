#include "ctstreak/image.hpp"

#include <cmath>
#include <stdexcept>

namespace ctstreak {

Image::Image(int width_, int height_, double fill)
    : width(width_), height(height_) {
  if (width <= 0 || height <= 0)
    throw std::invalid_argument("Image: dimensions must be positive");
  data.assign(static_cast<std::size_t>(width) * height, fill);
}

Sinogram::Sinogram(int n_angles_, int n_detectors_, double fill)
    : n_angles(n_angles_), n_detectors(n_detectors_) {
  if (n_angles <= 0 || n_detectors <= 0)
    throw std::invalid_argument("Sinogram: dimensions must be positive");
  data.assign(static_cast<std::size_t>(n_angles) * n_detectors, fill);
}

std::vector<double> Geometry::angles() const {
  std::vector<double> out(static_cast<std::size_t>(n_angles));
  for (int k = 0; k < n_angles; ++k) out[k] = angle(k);
  return out;
}

Geometry make_parallel_geometry(int n_angles, int n_detectors, int image_size) {
  if (n_angles < 1 || n_detectors < 1 || image_size < 1)
    throw std::invalid_argument("make_parallel_geometry: counts must be >= 1");
  Geometry g;
  g.n_angles = n_angles;
  g.angular_span = std::numbers::pi;
  g.n_detectors = n_detectors;
  g.detector_spacing = 1.0;
  g.image_width = image_size;
  g.image_height = image_size;
  g.pixel_size = 1.0;
  return g;
}

Sinogram make_sinogram(const Geometry& geometry, double fill) {
  Sinogram s(geometry.n_angles, geometry.n_detectors, fill);
  s.angles = geometry.angles();
  s.detector_spacing = geometry.detector_spacing;
  return s;
}

void check_finite(const Image& image) {
  for (double v : image.data)
    if (!std::isfinite(v)) throw std::invalid_argument("Image: non-finite value");
}

void check_finite(const Sinogram& sinogram) {
  for (double v : sinogram.data)
    if (!std::isfinite(v)) throw std::invalid_argument("Sinogram: non-finite value");
}

}  // namespace ctstreak
