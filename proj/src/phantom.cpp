#include "ctstreak/phantom.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ctstreak/rng.hpp"
#include "ctstreak/threads.hpp"

namespace ctstreak {

namespace {

constexpr int kSubsamples = 4;  // 4x4 coverage samples per pixel

const Ellipse kSheppLogan[] = {
    {1.0, 0.69, 0.92, 0.0, 0.0, 0.0},
    {-0.8, 0.6624, 0.8740, 0.0, -0.0184, 0.0},
    {-0.2, 0.1100, 0.3100, 0.22, 0.0, -0.3141592653589793},  // -18 deg
    {-0.2, 0.1600, 0.4100, -0.22, 0.0, 0.3141592653589793},  // +18 deg
    {0.1, 0.2100, 0.2500, 0.0, 0.35, 0.0},
    {0.1, 0.0460, 0.0460, 0.0, 0.1, 0.0},
    {0.1, 0.0460, 0.0460, 0.0, -0.1, 0.0},
    {0.1, 0.0460, 0.0230, -0.08, -0.605, 0.0},
    {0.1, 0.0230, 0.0230, 0.0, -0.606, 0.0},
    {0.1, 0.0230, 0.0460, 0.06, -0.605, 0.0},
};

Image render_ellipses(int size, const Ellipse* ellipses, int count) {
  Image img(size, size);
  const double half = 0.5 * size;
  parallel_for(size, [&](int row_begin, int row_end) {
    for (int iy = row_begin; iy < row_end; ++iy) {
      for (int ix = 0; ix < size; ++ix) {
        double acc = 0.0;
        for (int sy = 0; sy < kSubsamples; ++sy) {
          for (int sx = 0; sx < kSubsamples; ++sx) {
            const double px = ix + (sx + 0.5) / kSubsamples;
            const double py = iy + (sy + 0.5) / kSubsamples;
            const double x = (px - half) / half;
            const double y = (half - py) / half;  // +y up
            acc += ellipse_sum_at(ellipses, count, x, y);
          }
        }
        double v = acc / (kSubsamples * kSubsamples);
        if (v < 0.0) v = 0.0;
        if (v > 1.0) v = 1.0;
        img.at(ix, iy) = v;
      }
    }
  });
  return img;
}

}  // namespace

double ellipse_sum_at(const Ellipse* ellipses, int count, double x, double y) {
  double sum = 0.0;
  for (int i = 0; i < count; ++i) {
    const Ellipse& e = ellipses[i];
    const double dx = x - e.center_x;
    const double dy = y - e.center_y;
    const double c = std::cos(e.rotation);
    const double s = std::sin(e.rotation);
    const double u = (dx * c + dy * s) / e.semi_a;
    const double v = (-dx * s + dy * c) / e.semi_b;
    if (u * u + v * v <= 1.0) sum += e.intensity;
  }
  return sum;
}

const Ellipse* shepp_logan_ellipses(int* count) {
  if (count) *count = static_cast<int>(std::size(kSheppLogan));
  return kSheppLogan;
}

Image shepp_logan(int size) {
  if (size < 16) throw std::invalid_argument("shepp_logan: size must be >= 16");
  return render_ellipses(size, kSheppLogan, static_cast<int>(std::size(kSheppLogan)));
}

Image random_ellipse_phantom(int size, int n_ellipses, std::uint64_t seed) {
  if (size < 16) throw std::invalid_argument("random_ellipse_phantom: size must be >= 16");
  if (n_ellipses < 1)
    throw std::invalid_argument("random_ellipse_phantom: n_ellipses must be >= 1");
  Rng rng(seed);
  std::vector<Ellipse> ellipses(static_cast<std::size_t>(n_ellipses));
  for (Ellipse& e : ellipses) {
    const double center_r = rng.uniform(0.0, 0.55);
    const double center_angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
    e.center_x = center_r * std::cos(center_angle);
    e.center_y = center_r * std::sin(center_angle);
    // 0.55 + 0.35 = 0.9, so every ellipse fits in the 0.9 disk.
    e.semi_a = rng.uniform(0.08, 0.35);
    e.semi_b = rng.uniform(0.08, 0.35);
    e.rotation = rng.uniform(0.0, std::numbers::pi);
    e.intensity = rng.uniform(0.15, 0.55);
  }
  return render_ellipses(size, ellipses.data(), n_ellipses);
}

Image disk_phantom(int size, double radius, double value) {
  if (size < 1) throw std::invalid_argument("disk_phantom: size must be >= 1");
  Image img(size, size);
  const double half = 0.5 * size;
  for (int iy = 0; iy < size; ++iy) {
    for (int ix = 0; ix < size; ++ix) {
      int inside = 0;
      for (int sy = 0; sy < kSubsamples; ++sy) {
        for (int sx = 0; sx < kSubsamples; ++sx) {
          const double x = ix + (sx + 0.5) / kSubsamples - half;
          const double y = iy + (sy + 0.5) / kSubsamples - half;
          if (x * x + y * y <= radius * radius) ++inside;
        }
      }
      img.at(ix, iy) = value * inside / (kSubsamples * kSubsamples);
    }
  }
  return img;
}

}  // namespace ctstreak
