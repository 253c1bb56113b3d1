#pragma once

#include <cstdint>
#include <functional>
#include <span>

namespace ctstreak::nn {

// Central-difference gradient check. `loss` re-evaluates the scalar
// objective at the current contents of `params`; entries are perturbed one
// at a time by h = h_scale * max(1, |theta_i|) and restored. Returns the
// worst relative disagreement |fd - analytic| / max(|fd|, |analytic|, 1e-8).
// When max_coordinates > 0 and the vector is larger, a seeded random subset
// of that size is checked instead of every entry.
double grad_check(const std::function<double()>& loss, std::span<double> params,
                  std::span<const double> analytic_grad, double h_scale = 1e-5,
                  int max_coordinates = 0, std::uint64_t seed = 1234);

}  // namespace ctstreak::nn
