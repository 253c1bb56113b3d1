#include "ctstreak/projector.hpp"

#include <cmath>
#include <stdexcept>

#include "ctstreak/threads.hpp"

namespace ctstreak {

namespace {

// A ray is the line x*cos(theta) + y*sin(theta) = s (pixel units, origin at
// the image center). Rays with |cos| >= |sin| cross every image row once
// and interpolate horizontally; the rest cross every column and interpolate
// vertically.
inline bool row_marching(double cos_t, double sin_t) {
  return std::abs(cos_t) >= std::abs(sin_t);
}

inline double detector_offset(const Geometry& g, int d) {
  // in pixel units
  return (d + 0.5 - 0.5 * g.n_detectors) * g.detector_spacing / g.pixel_size;
}

void check_image_dims(const Image& img, const Geometry& g, const char* who) {
  if (img.width != g.image_width || img.height != g.image_height)
    throw std::invalid_argument(std::string(who) + ": image does not match geometry");
}

void check_sino_dims(const Sinogram& s, const Geometry& g, const char* who) {
  if (s.n_angles != g.n_angles || s.n_detectors != g.n_detectors)
    throw std::invalid_argument(std::string(who) + ": sinogram does not match geometry");
}

}  // namespace

Sinogram forward_project(const Image& image, const Geometry& geometry) {
  check_image_dims(image, geometry, "forward_project");
  Sinogram out = make_sinogram(geometry);
  const int W = image.width, H = image.height;
  const int n_det = geometry.n_detectors;
  const double* img = image.data.data();

  parallel_for(geometry.n_angles, [&](int a_begin, int a_end) {
    for (int a = a_begin; a < a_end; ++a) {
      const double theta = geometry.angle(a);
      const double c = std::cos(theta);
      const double s = std::sin(theta);
      double* row = out.data.data() + static_cast<std::size_t>(a) * n_det;
      if (row_marching(c, s)) {
        const double step = geometry.pixel_size / std::abs(c);
        for (int d = 0; d < n_det; ++d) {
          const double offs = detector_offset(geometry, d);
          double acc = 0.0;
          for (int iy = 0; iy < H; ++iy) {
            const double y = iy + 0.5 - 0.5 * H;
            const double u = (offs - y * s) / c + 0.5 * W - 0.5;
            const int i0 = static_cast<int>(std::floor(u));
            const double f = u - i0;
            if (i0 >= 0 && i0 < W) acc += (1.0 - f) * img[static_cast<std::size_t>(iy) * W + i0];
            if (i0 + 1 >= 0 && i0 + 1 < W) acc += f * img[static_cast<std::size_t>(iy) * W + i0 + 1];
          }
          row[d] = acc * step;
        }
      } else {
        const double step = geometry.pixel_size / std::abs(s);
        for (int d = 0; d < n_det; ++d) {
          const double offs = detector_offset(geometry, d);
          double acc = 0.0;
          for (int ix = 0; ix < W; ++ix) {
            const double x = ix + 0.5 - 0.5 * W;
            const double v = (offs - x * c) / s + 0.5 * H - 0.5;
            const int i0 = static_cast<int>(std::floor(v));
            const double f = v - i0;
            if (i0 >= 0 && i0 < H) acc += (1.0 - f) * img[static_cast<std::size_t>(i0) * W + ix];
            if (i0 + 1 >= 0 && i0 + 1 < H) acc += f * img[static_cast<std::size_t>(i0 + 1) * W + ix];
          }
          row[d] = acc * step;
        }
      }
    }
  });
  return out;
}

Image back_project(const Sinogram& sinogram, const Geometry& geometry) {
  check_sino_dims(sinogram, geometry, "back_project");
  Image out(geometry.image_width, geometry.image_height, 0.0);
  const int W = out.width, H = out.height;
  const int n_det = geometry.n_detectors;
  double* img = out.data.data();

  // Row-marching rays touch two pixels of one image row per step, so each
  // output row accumulates independently; likewise columns in pass two.
  parallel_for(H, [&](int y_begin, int y_end) {
    for (int a = 0; a < geometry.n_angles; ++a) {
      const double theta = geometry.angle(a);
      const double c = std::cos(theta);
      const double s = std::sin(theta);
      if (!row_marching(c, s)) continue;
      const double step = geometry.pixel_size / std::abs(c);
      const double* row = sinogram.data.data() + static_cast<std::size_t>(a) * n_det;
      for (int iy = y_begin; iy < y_end; ++iy) {
        const double y = iy + 0.5 - 0.5 * H;
        double* out_row = img + static_cast<std::size_t>(iy) * W;
        for (int d = 0; d < n_det; ++d) {
          const double val = row[d] * step;
          const double u = (detector_offset(geometry, d) - y * s) / c + 0.5 * W - 0.5;
          const int i0 = static_cast<int>(std::floor(u));
          const double f = u - i0;
          if (i0 >= 0 && i0 < W) out_row[i0] += (1.0 - f) * val;
          if (i0 + 1 >= 0 && i0 + 1 < W) out_row[i0 + 1] += f * val;
        }
      }
    }
  });
  parallel_for(W, [&](int x_begin, int x_end) {
    for (int a = 0; a < geometry.n_angles; ++a) {
      const double theta = geometry.angle(a);
      const double c = std::cos(theta);
      const double s = std::sin(theta);
      if (row_marching(c, s)) continue;
      const double step = geometry.pixel_size / std::abs(s);
      const double* row = sinogram.data.data() + static_cast<std::size_t>(a) * n_det;
      for (int ix = x_begin; ix < x_end; ++ix) {
        const double x = ix + 0.5 - 0.5 * W;
        for (int d = 0; d < n_det; ++d) {
          const double val = row[d] * step;
          const double v = (detector_offset(geometry, d) - x * c) / s + 0.5 * H - 0.5;
          const int i0 = static_cast<int>(std::floor(v));
          const double f = v - i0;
          if (i0 >= 0 && i0 < H) img[static_cast<std::size_t>(i0) * W + ix] += (1.0 - f) * val;
          if (i0 + 1 >= 0 && i0 + 1 < H) img[static_cast<std::size_t>(i0 + 1) * W + ix] += f * val;
        }
      }
    }
  });
  return out;
}

Sinogram row_sums(const Geometry& geometry) {
  Image ones(geometry.image_width, geometry.image_height, 1.0);
  return forward_project(ones, geometry);
}

Image col_sums(const Geometry& geometry) {
  Sinogram ones = make_sinogram(geometry, 1.0);
  return back_project(ones, geometry);
}

}  // namespace ctstreak
