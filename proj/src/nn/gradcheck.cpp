#include "ctstreak/nn/gradcheck.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "ctstreak/rng.hpp"

namespace ctstreak::nn {

double grad_check(const std::function<double()>& loss, std::span<double> params,
                  std::span<const double> analytic_grad, double h_scale,
                  int max_coordinates, std::uint64_t seed) {
  if (params.size() != analytic_grad.size())
    throw std::invalid_argument("grad_check: gradient size mismatch");

  std::vector<std::size_t> coords(params.size());
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = i;
  if (max_coordinates > 0 && coords.size() > static_cast<std::size_t>(max_coordinates)) {
    Rng rng(seed);
    rng.shuffle(coords);
    coords.resize(static_cast<std::size_t>(max_coordinates));
  }

  double worst = 0.0;
  for (std::size_t i : coords) {
    const double original = params[i];
    const double h = h_scale * std::max(1.0, std::abs(original));
    params[i] = original + h;
    const double up = loss();
    params[i] = original - h;
    const double down = loss();
    params[i] = original;
    const double fd = (up - down) / (2.0 * h);
    const double denom = std::max({std::abs(fd), std::abs(analytic_grad[i]), 1e-8});
    worst = std::max(worst, std::abs(fd - analytic_grad[i]) / denom);
  }
  return worst;
}

}  // namespace ctstreak::nn
