#pragma once

#include "ctstreak/image.hpp"

namespace ctstreak {

// Parallel-beam forward projection with the Joseph (linear-interpolation)
// kernel: each ray marches one image row or column per step along its
// dominant axis and splits its weight between the two straddled pixels.
// The implicit system matrix has nonnegative entries and back_project is
// its exact transpose.
Sinogram forward_project(const Image& image, const Geometry& geometry);

// Exact adjoint of forward_project (same interpolation weights).
Image back_project(const Sinogram& sinogram, const Geometry& geometry);

// Per-ray weight sums, equal to forward_project of an all-ones image.
Sinogram row_sums(const Geometry& geometry);

// Per-pixel weight sums, equal to back_project of an all-ones sinogram.
Image col_sums(const Geometry& geometry);

}  // namespace ctstreak
