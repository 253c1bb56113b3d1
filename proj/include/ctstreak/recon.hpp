#pragma once

#include <string>

#include "ctstreak/image.hpp"

namespace ctstreak {

enum class ReconMethod { FBP, SIRT, CGLS, TVMIN };

struct ReconConfig {
  ReconMethod method = ReconMethod::SIRT;
  int iterations = 100;    // SIRT/CGLS/TVMIN
  double tv_weight = 0.1;  // TVMIN only
  // FBP always uses the Ram-Lak (|q|) filter with power-of-two zero padding.
};

ReconMethod recon_method_from_string(const std::string& name);

// Expected detector counts I = I0 * exp(-p), entrywise.
Sinogram transmit(const Sinogram& projections, double intensity);

// p = -ln(max(I, 1) / I0); counts below one photon are clamped so the log
// stays finite.
Sinogram log_normalize(const Sinogram& counts, double intensity);

// Filtered backprojection: each row zero-padded to the next power of two
// >= 2 * n_detectors, multiplied by |q| in the Fourier domain, inverse
// transformed, backprojected, and scaled by pi / n_angles.
Image fbp(const Sinogram& sinogram, const Geometry& geometry);

// x <- x + C .* A^T(R .* (p - A x)) with R, C the reciprocal ray/pixel
// weight sums; weights below 1e-12 drop out of the update. Runs exactly
// `iterations` updates from `initial` (zero image when null).
Image sirt(const Sinogram& sinogram, const Geometry& geometry, int iterations,
           const Image* initial = nullptr);

// Conjugate gradient on the normal equations, zero start.
Image cgls(const Sinogram& sinogram, const Geometry& geometry, int iterations);

// Chambolle-Pock primal-dual for 0.5*||Ax - p||^2 + tv_weight * TV(x)
// (isotropic TV, forward differences), primal iterate clipped to >= 0.
// Step sizes come from a power-method estimate of ||A||.
Image tvmin(const Sinogram& sinogram, const Geometry& geometry, int iterations,
            double tv_weight);

Image reconstruct(const Sinogram& sinogram, const Geometry& geometry,
                  const ReconConfig& config);

// Largest singular value of the projection operator (power method on A^T A,
// deterministic start).
double operator_norm(const Geometry& geometry, int iterations = 30);

// Isotropic total variation (forward differences, Neumann boundary).
double total_variation(const Image& image);

}  // namespace ctstreak
