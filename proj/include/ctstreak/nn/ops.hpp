#pragma once

#include "ctstreak/nn/tensor.hpp"

namespace ctstreak::nn {

enum class Activation { Relu, Sigmoid, Tanh };

// Entrywise nonlinearity.
Tensor activate(const Tensor& x, Activation kind);

// upstream times the pointwise derivative, evaluated at the forward input x.
Tensor activate_backward(const Tensor& x, Activation kind, const Tensor& upstream);

struct LossAndGrad {
  double loss = 0.0;
  Tensor grad;
};

// Mean squared error normalized by the element count (batch x patches x
// channels x height x width), with the gradient w.r.t. the output.
LossAndGrad mse_loss(const Tensor& output, const Tensor& target);

}  // namespace ctstreak::nn
