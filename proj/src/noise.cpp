#include "ctstreak/noise.hpp"

#include <cmath>
#include <stdexcept>

#include "ctstreak/recon.hpp"
#include "ctstreak/rng.hpp"

namespace ctstreak {

Sinogram apply_poisson_noise(const Sinogram& sinogram, const NoiseConfig& config) {
  if (!(config.intensity > 0.0))
    throw std::invalid_argument("apply_poisson_noise: intensity must be positive");
  for (double v : sinogram.data)
    if (!(v >= 0.0) || !std::isfinite(v))
      throw std::invalid_argument("apply_poisson_noise: projections must be finite and >= 0");

  Sinogram counts = transmit(sinogram, config.intensity);
  Rng rng(config.seed);
  for (double& v : counts.data) v = static_cast<double>(rng.poisson(v));
  return log_normalize(counts, config.intensity);
}

}  // namespace ctstreak
