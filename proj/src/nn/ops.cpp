#include "ctstreak/nn/ops.hpp"

#include <cmath>
#include <stdexcept>

namespace ctstreak::nn {

Tensor activate(const Tensor& x, Activation kind) {
  Tensor out = x;
  switch (kind) {
    case Activation::Relu:
      for (double& v : out.data) v = v > 0.0 ? v : 0.0;
      break;
    case Activation::Sigmoid:
      for (double& v : out.data) v = 1.0 / (1.0 + std::exp(-v));
      break;
    case Activation::Tanh:
      for (double& v : out.data) v = std::tanh(v);
      break;
  }
  return out;
}

Tensor activate_backward(const Tensor& x, Activation kind, const Tensor& upstream) {
  if (!x.same_shape(upstream))
    throw std::invalid_argument("activate_backward: shape mismatch");
  Tensor out = upstream;
  switch (kind) {
    case Activation::Relu:
      for (std::size_t i = 0; i < out.data.size(); ++i)
        if (x.data[i] <= 0.0) out.data[i] = 0.0;
      break;
    case Activation::Sigmoid:
      for (std::size_t i = 0; i < out.data.size(); ++i) {
        const double s = 1.0 / (1.0 + std::exp(-x.data[i]));
        out.data[i] *= s * (1.0 - s);
      }
      break;
    case Activation::Tanh:
      for (std::size_t i = 0; i < out.data.size(); ++i) {
        const double t = std::tanh(x.data[i]);
        out.data[i] *= 1.0 - t * t;
      }
      break;
  }
  return out;
}

LossAndGrad mse_loss(const Tensor& output, const Tensor& target) {
  if (!output.same_shape(target)) throw std::invalid_argument("mse_loss: shape mismatch");
  LossAndGrad result;
  result.grad = Tensor::zeros_like(output);
  const double scale = 1.0 / static_cast<double>(output.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < output.data.size(); ++i) {
    const double diff = output.data[i] - target.data[i];
    acc += diff * diff;
    result.grad.data[i] = 2.0 * diff * scale;
  }
  result.loss = acc * scale;
  return result;
}

}  // namespace ctstreak::nn
