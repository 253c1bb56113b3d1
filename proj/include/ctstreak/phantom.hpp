#pragma once

#include <cstdint>

#include "ctstreak/image.hpp"

namespace ctstreak {

// One phantom ellipse in normalized [-1, 1]^2 coordinates.
struct Ellipse {
  double intensity;
  double semi_a, semi_b;
  double center_x, center_y;
  double rotation;  // radians, counterclockwise
};

// Sum of ellipse intensities at a normalized point.
double ellipse_sum_at(const Ellipse* ellipses, int count, double x, double y);

// Modified Shepp-Logan head phantom (the low-contrast variant shipped by the
// usual tomography toolboxes), rendered with 4x4 subpixel coverage and
// clipped to [0, 1]. size must be >= 16.
Image shepp_logan(int size);

// The ten-ellipse table behind shepp_logan, exposed for analytic checks.
const Ellipse* shepp_logan_ellipses(int* count);

// Deterministic phantom of n random ellipses composited additively and
// clipped to [0, 1]. Every ellipse stays inside the centered disk of
// normalized radius 0.9 so any detector row at least as wide as the image
// covers it at all angles.
Image random_ellipse_phantom(int size, int n_ellipses, std::uint64_t seed);

// Anti-aliased centered disk of the given radius (pixels) and value; test
// and demo helper.
Image disk_phantom(int size, double radius, double value = 1.0);

}  // namespace ctstreak
