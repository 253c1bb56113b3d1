#include "ctstreak/nn/tensor.hpp"

#include <stdexcept>

#include "ctstreak/rng.hpp"

namespace ctstreak::nn {

Tensor::Tensor(std::vector<int> shape_, double fill) : shape(std::move(shape_)) {
  if (shape.empty() || shape.size() > 5)
    throw std::invalid_argument("Tensor: rank must be 1..5");
  std::size_t count = 1;
  for (int d : shape) {
    if (d < 1) throw std::invalid_argument("Tensor: dims must be >= 1");
    count *= static_cast<std::size_t>(d);
  }
  data.assign(count, fill);
}

Tensor uniform_init(std::vector<int> shape, double lo, double hi, std::uint64_t seed) {
  if (!(lo < hi)) throw std::invalid_argument("uniform_init: need lo < hi");
  Tensor t(std::move(shape));
  Rng rng(seed);
  for (double& v : t.data) v = rng.uniform(lo, hi);
  return t;
}

}  // namespace ctstreak::nn
