#pragma once

#include <cstdint>

#include "ctstreak/image.hpp"

namespace ctstreak {

struct NoiseConfig {
  double intensity = 1000.0;  // expected photons per detector pixel, > 0
  std::uint64_t seed = 0;
};

// Photon-count noise: p -> I0*exp(-p) -> Poisson sample -> log-normalize.
// Entries are sampled in row-major order from one seeded generator, so a
// fixed (sinogram, config) always yields the same output.
Sinogram apply_poisson_noise(const Sinogram& sinogram, const NoiseConfig& config);

}  // namespace ctstreak
