#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ctstreak::nn {

// Dense N-dimensional double array, row-major, rank <= 5. Network code uses
// the dimension order (sample, patch/time, channel, height, width); the
// optional grad buffer mirrors the data layout when present.
struct Tensor {
  std::vector<int> shape;
  std::vector<double> data;
  std::vector<double> grad;  // empty unless ensure_grad() was called

  Tensor() = default;
  explicit Tensor(std::vector<int> shape_, double fill = 0.0);

  static Tensor zeros_like(const Tensor& t) { return Tensor(t.shape); }

  int rank() const { return static_cast<int>(shape.size()); }
  int dim(int i) const { return shape[static_cast<std::size_t>(i)]; }
  std::size_t size() const { return data.size(); }
  bool same_shape(const Tensor& other) const { return shape == other.shape; }

  void ensure_grad() {
    if (grad.size() != data.size()) grad.assign(data.size(), 0.0);
  }

  // [N, C, H, W]
  double& at4(int n, int c, int h, int w) {
    return data[((static_cast<std::size_t>(n) * shape[1] + c) * shape[2] + h) * shape[3] + w];
  }
  double at4(int n, int c, int h, int w) const {
    return data[((static_cast<std::size_t>(n) * shape[1] + c) * shape[2] + h) * shape[3] + w];
  }

  // [N, T, C, H, W]
  double& at5(int n, int t, int c, int h, int w) {
    return data[(((static_cast<std::size_t>(n) * shape[1] + t) * shape[2] + c) * shape[3] + h) *
                    shape[4] +
                w];
  }
  double at5(int n, int t, int c, int h, int w) const {
    return data[(((static_cast<std::size_t>(n) * shape[1] + t) * shape[2] + c) * shape[3] + h) *
                    shape[4] +
                w];
  }
};

// Uniform i.i.d. samples in [lo, hi), deterministic by seed. Throws
// std::invalid_argument when lo >= hi.
Tensor uniform_init(std::vector<int> shape, double lo, double hi, std::uint64_t seed);

}  // namespace ctstreak::nn
