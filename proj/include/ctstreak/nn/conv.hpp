#pragma once

#include "ctstreak/nn/tensor.hpp"

namespace ctstreak::nn {

// Strided [N, C, H, W] window into a tensor. Rows are contiguous; n and c
// strides are free so a view can select a channel prefix of a wider stack
// or one time step of a [N, T, C, H, W] sequence.
struct ConstView4 {
  const double* ptr = nullptr;
  int n = 0, c = 0, h = 0, w = 0;
  std::size_t n_stride = 0, c_stride = 0;

  const double* plane(int i, int ch) const {
    return ptr + i * n_stride + ch * c_stride;
  }
};

struct MutView4 {
  double* ptr = nullptr;
  int n = 0, c = 0, h = 0, w = 0;
  std::size_t n_stride = 0, c_stride = 0;

  double* plane(int i, int ch) const { return ptr + i * n_stride + ch * c_stride; }
};

ConstView4 view4(const Tensor& t);
MutView4 view4_mut(Tensor& t);
// First `channels` channels of a rank-4 tensor.
ConstView4 channel_prefix(const Tensor& t, int channels);
MutView4 channel_prefix_mut(Tensor& t, int channels);
// Step t of a [N, T, C, H, W] tensor, viewed as [N, C, H, W].
ConstView4 time_slice(const Tensor& t5, int t);
MutView4 time_slice_mut(Tensor& t5, int t);

// Zero-padded same-size 2D convolution, kernel [co, ci, k, k] with k odd
// (3 in practice, 1 for the linear output layers); taps sit dilation pixels
// apart. No bias.
Tensor conv2d(const ConstView4& input, const Tensor& kernel, int dilation);

// Accumulates the gradient w.r.t. the convolution input into input_grad.
void conv2d_input_grad_accum(const Tensor& kernel, const Tensor& upstream,
                             int dilation, const MutView4& input_grad);

// Accumulates the gradient w.r.t. the kernel.
void conv2d_kernel_grad_accum(const ConstView4& input, const Tensor& upstream,
                              int dilation, Tensor& kernel_grad);

void add_channel_bias(Tensor& x, const Tensor& bias);
void channel_bias_grad_accum(const Tensor& upstream, Tensor& bias_grad);

// A convolution layer: 3x3 (or 1x1) kernel plus per-output-channel bias.
struct ConvLayerParams {
  int in_channels = 1;
  int out_channels = 1;
  int dilation = 1;
  int kernel_size = 3;
  Tensor kernel;  // [out, in, k, k]
  Tensor bias;    // [out]
};

ConvLayerParams make_conv_params(int in_channels, int out_channels, int dilation,
                                 int kernel_size = 3);
ConvLayerParams zeros_like(const ConvLayerParams& p);

// Same-size dilated convolution with bias. Throws std::invalid_argument on
// a channel-count mismatch.
Tensor dilated_conv2d(const Tensor& input, const ConvLayerParams& params);

struct ConvGrads {
  Tensor input_grad;
  Tensor kernel_grad;
  Tensor bias_grad;
};

// Exact gradients of dilated_conv2d.
ConvGrads dilated_conv2d_backward(const Tensor& input, const ConvLayerParams& params,
                                  const Tensor& upstream);

}  // namespace ctstreak::nn
