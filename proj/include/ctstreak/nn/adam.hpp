#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ctstreak::nn {

// Adam moments over one flat parameter vector.
struct AdamState {
  long long step_count = 0;
  double lr = 1e-4;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  std::vector<double> m, v;
};

AdamState make_adam_state(std::size_t n_params, double lr = 1e-4);

// One Adam update with bias correction; increments step_count.
void adam_step(std::span<double> params, std::span<const double> grads, AdamState& state);

}  // namespace ctstreak::nn
