#include "ctstreak/nn/conv.hpp"

#include <algorithm>
#include <stdexcept>

namespace ctstreak::nn {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

ConstView4 view4(const Tensor& t) {
  require(t.rank() == 4, "view4: tensor must be rank 4");
  const std::size_t c_stride = static_cast<std::size_t>(t.dim(2)) * t.dim(3);
  return {t.data.data(), t.dim(0), t.dim(1), t.dim(2), t.dim(3),
          c_stride * t.dim(1), c_stride};
}

MutView4 view4_mut(Tensor& t) {
  require(t.rank() == 4, "view4_mut: tensor must be rank 4");
  const std::size_t c_stride = static_cast<std::size_t>(t.dim(2)) * t.dim(3);
  return {t.data.data(), t.dim(0), t.dim(1), t.dim(2), t.dim(3),
          c_stride * t.dim(1), c_stride};
}

ConstView4 channel_prefix(const Tensor& t, int channels) {
  ConstView4 v = view4(t);
  require(channels >= 1 && channels <= v.c, "channel_prefix: bad channel count");
  v.c = channels;
  return v;
}

MutView4 channel_prefix_mut(Tensor& t, int channels) {
  MutView4 v = view4_mut(t);
  require(channels >= 1 && channels <= v.c, "channel_prefix_mut: bad channel count");
  v.c = channels;
  return v;
}

ConstView4 time_slice(const Tensor& t5, int t) {
  require(t5.rank() == 5, "time_slice: tensor must be rank 5");
  require(t >= 0 && t < t5.dim(1), "time_slice: step out of range");
  const std::size_t c_stride = static_cast<std::size_t>(t5.dim(3)) * t5.dim(4);
  const std::size_t t_stride = c_stride * t5.dim(2);
  return {t5.data.data() + t * t_stride, t5.dim(0), t5.dim(2), t5.dim(3), t5.dim(4),
          t_stride * t5.dim(1), c_stride};
}

MutView4 time_slice_mut(Tensor& t5, int t) {
  require(t5.rank() == 5, "time_slice_mut: tensor must be rank 5");
  require(t >= 0 && t < t5.dim(1), "time_slice_mut: step out of range");
  const std::size_t c_stride = static_cast<std::size_t>(t5.dim(3)) * t5.dim(4);
  const std::size_t t_stride = c_stride * t5.dim(2);
  return {t5.data.data() + t * t_stride, t5.dim(0), t5.dim(2), t5.dim(3), t5.dim(4),
          t_stride * t5.dim(1), c_stride};
}

Tensor conv2d(const ConstView4& input, const Tensor& kernel, int dilation) {
  require(kernel.rank() == 4, "conv2d: kernel must be rank 4");
  require(dilation >= 1, "conv2d: dilation must be >= 1");
  const int co = kernel.dim(0), ci = kernel.dim(1), k = kernel.dim(2);
  require(kernel.dim(3) == k && k % 2 == 1, "conv2d: kernel must be square and odd");
  require(ci == input.c, "conv2d: input channels do not match kernel");

  const int H = input.h, W = input.w;
  Tensor out({input.n, co, H, W}, 0.0);
  const int center = k / 2;

  for (int n = 0; n < input.n; ++n) {
    for (int o = 0; o < co; ++o) {
      double* out_plane = out.data.data() +
                          (static_cast<std::size_t>(n) * co + o) * H * W;
      for (int c = 0; c < ci; ++c) {
        const double* in_plane = input.plane(n, c);
        for (int ky = 0; ky < k; ++ky) {
          const int dy = (ky - center) * dilation;
          const int h0 = std::max(0, -dy), h1 = std::min(H, H - dy);
          for (int kx = 0; kx < k; ++kx) {
            const double wgt = kernel.at4(o, c, ky, kx);
            if (wgt == 0.0) continue;
            const int dx = (kx - center) * dilation;
            const int w0 = std::max(0, -dx), w1 = std::min(W, W - dx);
            for (int h = h0; h < h1; ++h) {
              double* orow = out_plane + static_cast<std::size_t>(h) * W;
              const double* irow = in_plane + static_cast<std::size_t>(h + dy) * W + dx;
              for (int x = w0; x < w1; ++x) orow[x] += wgt * irow[x];
            }
          }
        }
      }
    }
  }
  return out;
}

void conv2d_input_grad_accum(const Tensor& kernel, const Tensor& upstream,
                             int dilation, const MutView4& input_grad) {
  const int co = kernel.dim(0), ci = kernel.dim(1), k = kernel.dim(2);
  require(upstream.rank() == 4 && upstream.dim(1) == co,
          "conv2d_input_grad_accum: upstream does not match kernel");
  require(ci == input_grad.c && upstream.dim(0) == input_grad.n &&
              upstream.dim(2) == input_grad.h && upstream.dim(3) == input_grad.w,
          "conv2d_input_grad_accum: shape mismatch");
  const int H = input_grad.h, W = input_grad.w;
  const int center = k / 2;

  for (int n = 0; n < input_grad.n; ++n) {
    for (int c = 0; c < ci; ++c) {
      double* gin_plane = input_grad.plane(n, c);
      for (int o = 0; o < co; ++o) {
        const double* gout_plane = upstream.data.data() +
                                   (static_cast<std::size_t>(n) * co + o) * H * W;
        for (int ky = 0; ky < k; ++ky) {
          const int dy = (ky - center) * dilation;
          const int h0 = std::max(0, -dy), h1 = std::min(H, H - dy);
          for (int kx = 0; kx < k; ++kx) {
            const double wgt = kernel.at4(o, c, ky, kx);
            if (wgt == 0.0) continue;
            const int dx = (kx - center) * dilation;
            const int w0 = std::max(0, -dx), w1 = std::min(W, W - dx);
            // out[h, x] consumed in[h+dy, x+dx], so in-grad[h+dy, x+dx] += w*gout[h, x]
            for (int h = h0; h < h1; ++h) {
              double* grow = gin_plane + static_cast<std::size_t>(h + dy) * W + dx;
              const double* gout_row = gout_plane + static_cast<std::size_t>(h) * W;
              for (int x = w0; x < w1; ++x) grow[x] += wgt * gout_row[x];
            }
          }
        }
      }
    }
  }
}

void conv2d_kernel_grad_accum(const ConstView4& input, const Tensor& upstream,
                              int dilation, Tensor& kernel_grad) {
  const int co = kernel_grad.dim(0), ci = kernel_grad.dim(1), k = kernel_grad.dim(2);
  require(upstream.rank() == 4 && upstream.dim(1) == co && upstream.dim(0) == input.n &&
              upstream.dim(2) == input.h && upstream.dim(3) == input.w,
          "conv2d_kernel_grad_accum: shape mismatch");
  require(ci == input.c, "conv2d_kernel_grad_accum: channel mismatch");
  const int H = input.h, W = input.w;
  const int center = k / 2;

  for (int n = 0; n < input.n; ++n) {
    for (int o = 0; o < co; ++o) {
      const double* gout_plane = upstream.data.data() +
                                 (static_cast<std::size_t>(n) * co + o) * H * W;
      for (int c = 0; c < ci; ++c) {
        const double* in_plane = input.plane(n, c);
        for (int ky = 0; ky < k; ++ky) {
          const int dy = (ky - center) * dilation;
          const int h0 = std::max(0, -dy), h1 = std::min(H, H - dy);
          for (int kx = 0; kx < k; ++kx) {
            const int dx = (kx - center) * dilation;
            const int w0 = std::max(0, -dx), w1 = std::min(W, W - dx);
            double acc = 0.0;
            for (int h = h0; h < h1; ++h) {
              const double* gout_row = gout_plane + static_cast<std::size_t>(h) * W;
              const double* irow = in_plane + static_cast<std::size_t>(h + dy) * W + dx;
              for (int x = w0; x < w1; ++x) acc += gout_row[x] * irow[x];
            }
            kernel_grad.at4(o, c, ky, kx) += acc;
          }
        }
      }
    }
  }
}

void add_channel_bias(Tensor& x, const Tensor& bias) {
  require(x.rank() == 4 && bias.rank() == 1 && bias.dim(0) == x.dim(1),
          "add_channel_bias: shape mismatch");
  const std::size_t plane = static_cast<std::size_t>(x.dim(2)) * x.dim(3);
  for (int n = 0; n < x.dim(0); ++n)
    for (int c = 0; c < x.dim(1); ++c) {
      double* p = x.data.data() + (static_cast<std::size_t>(n) * x.dim(1) + c) * plane;
      const double b = bias.data[static_cast<std::size_t>(c)];
      for (std::size_t i = 0; i < plane; ++i) p[i] += b;
    }
}

void channel_bias_grad_accum(const Tensor& upstream, Tensor& bias_grad) {
  require(upstream.rank() == 4 && bias_grad.rank() == 1 &&
              bias_grad.dim(0) == upstream.dim(1),
          "channel_bias_grad_accum: shape mismatch");
  const std::size_t plane = static_cast<std::size_t>(upstream.dim(2)) * upstream.dim(3);
  for (int n = 0; n < upstream.dim(0); ++n)
    for (int c = 0; c < upstream.dim(1); ++c) {
      const double* p = upstream.data.data() +
                        (static_cast<std::size_t>(n) * upstream.dim(1) + c) * plane;
      double acc = 0.0;
      for (std::size_t i = 0; i < plane; ++i) acc += p[i];
      bias_grad.data[static_cast<std::size_t>(c)] += acc;
    }
}

ConvLayerParams make_conv_params(int in_channels, int out_channels, int dilation,
                                 int kernel_size) {
  require(in_channels >= 1 && out_channels >= 1, "make_conv_params: bad channel count");
  require(dilation >= 1, "make_conv_params: dilation must be >= 1");
  require(kernel_size == 3 || kernel_size == 1, "make_conv_params: kernel must be 3x3 or 1x1");
  ConvLayerParams p;
  p.in_channels = in_channels;
  p.out_channels = out_channels;
  p.dilation = dilation;
  p.kernel_size = kernel_size;
  p.kernel = Tensor({out_channels, in_channels, kernel_size, kernel_size});
  p.bias = Tensor({out_channels});
  return p;
}

ConvLayerParams zeros_like(const ConvLayerParams& p) {
  ConvLayerParams z = p;
  std::fill(z.kernel.data.begin(), z.kernel.data.end(), 0.0);
  std::fill(z.bias.data.begin(), z.bias.data.end(), 0.0);
  return z;
}

Tensor dilated_conv2d(const Tensor& input, const ConvLayerParams& params) {
  if (input.rank() != 4 || input.dim(1) != params.in_channels)
    throw std::invalid_argument("dilated_conv2d: input channels do not match layer");
  Tensor out = conv2d(view4(input), params.kernel, params.dilation);
  add_channel_bias(out, params.bias);
  return out;
}

ConvGrads dilated_conv2d_backward(const Tensor& input, const ConvLayerParams& params,
                                  const Tensor& upstream) {
  if (input.rank() != 4 || input.dim(1) != params.in_channels)
    throw std::invalid_argument("dilated_conv2d_backward: input channels do not match layer");
  if (upstream.rank() != 4 || upstream.dim(0) != input.dim(0) ||
      upstream.dim(1) != params.out_channels || upstream.dim(2) != input.dim(2) ||
      upstream.dim(3) != input.dim(3))
    throw std::invalid_argument("dilated_conv2d_backward: upstream shape mismatch");

  ConvGrads g;
  g.input_grad = Tensor(input.shape, 0.0);
  g.kernel_grad = Tensor(params.kernel.shape, 0.0);
  g.bias_grad = Tensor(params.bias.shape, 0.0);
  conv2d_input_grad_accum(params.kernel, upstream, params.dilation, view4_mut(g.input_grad));
  conv2d_kernel_grad_accum(view4(input), upstream, params.dilation, g.kernel_grad);
  channel_bias_grad_accum(upstream, g.bias_grad);
  return g;
}

}  // namespace ctstreak::nn
