#include "ctstreak/recon.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "ctstreak/fft.hpp"
#include "ctstreak/projector.hpp"
#include "ctstreak/rng.hpp"

namespace ctstreak {

namespace {

constexpr double kWeightFloor = 1e-12;

void check_sino(const Sinogram& s, const Geometry& g, const char* who) {
  if (s.n_angles != g.n_angles || s.n_detectors != g.n_detectors)
    throw std::invalid_argument(std::string(who) + ": sinogram does not match geometry");
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

double norm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

// Forward differences with Neumann boundary (last row/column gradient 0).
void gradient(const Image& x, std::vector<double>& gx, std::vector<double>& gy) {
  const int W = x.width, H = x.height;
  gx.assign(x.size(), 0.0);
  gy.assign(x.size(), 0.0);
  for (int iy = 0; iy < H; ++iy) {
    for (int ix = 0; ix < W; ++ix) {
      const std::size_t i = static_cast<std::size_t>(iy) * W + ix;
      if (ix + 1 < W) gx[i] = x.data[i + 1] - x.data[i];
      if (iy + 1 < H) gy[i] = x.data[i + W] - x.data[i];
    }
  }
}

// Exact adjoint of `gradient`: out = Dx^T zx + Dy^T zy.
void gradient_adjoint(const std::vector<double>& zx, const std::vector<double>& zy,
                      Image& out) {
  const int W = out.width, H = out.height;
  std::fill(out.data.begin(), out.data.end(), 0.0);
  for (int iy = 0; iy < H; ++iy) {
    for (int ix = 0; ix < W; ++ix) {
      const std::size_t i = static_cast<std::size_t>(iy) * W + ix;
      if (ix + 1 < W) {
        out.data[i] -= zx[i];
        out.data[i + 1] += zx[i];
      }
      if (iy + 1 < H) {
        out.data[i] -= zy[i];
        out.data[i + W] += zy[i];
      }
    }
  }
}

}  // namespace

ReconMethod recon_method_from_string(const std::string& name) {
  if (name == "fbp") return ReconMethod::FBP;
  if (name == "sirt") return ReconMethod::SIRT;
  if (name == "cgls") return ReconMethod::CGLS;
  if (name == "tvmin") return ReconMethod::TVMIN;
  throw std::invalid_argument("unknown reconstruction method: " + name);
}

Sinogram transmit(const Sinogram& projections, double intensity) {
  if (!(intensity > 0.0))
    throw std::invalid_argument("transmit: intensity must be positive");
  Sinogram out = projections;
  for (double& v : out.data) v = intensity * std::exp(-v);
  return out;
}

Sinogram log_normalize(const Sinogram& counts, double intensity) {
  if (!(intensity > 0.0))
    throw std::invalid_argument("log_normalize: intensity must be positive");
  Sinogram out = counts;
  for (double& v : out.data) v = -std::log(std::max(v, 1.0) / intensity);
  return out;
}

Image fbp(const Sinogram& sinogram, const Geometry& geometry) {
  check_sino(sinogram, geometry, "fbp");
  const int n_det = geometry.n_detectors;
  const std::size_t padded = next_pow2(static_cast<std::size_t>(2) * n_det);
  const double spacing = geometry.detector_spacing;

  // |q| in cycles per length unit; bin 0 (DC) is zero.
  std::vector<double> ramp(padded);
  for (std::size_t k = 0; k < padded; ++k) {
    const std::size_t folded = std::min(k, padded - k);
    ramp[k] = static_cast<double>(folded) / (static_cast<double>(padded) * spacing);
  }

  Sinogram filtered = make_sinogram(geometry);
  std::vector<std::complex<double>> buf(padded);
  for (int a = 0; a < geometry.n_angles; ++a) {
    std::fill(buf.begin(), buf.end(), std::complex<double>(0.0, 0.0));
    for (int d = 0; d < n_det; ++d) buf[d] = sinogram.at(a, d);
    fft(buf, false);
    for (std::size_t k = 0; k < padded; ++k) buf[k] *= ramp[k];
    fft(buf, true);
    for (int d = 0; d < n_det; ++d) filtered.at(a, d) = buf[d].real();
  }

  Image out = back_project(filtered, geometry);
  const double scale = std::numbers::pi / geometry.n_angles * spacing;
  for (double& v : out.data) v *= scale;
  return out;
}

Image sirt(const Sinogram& sinogram, const Geometry& geometry, int iterations,
           const Image* initial) {
  check_sino(sinogram, geometry, "sirt");
  if (iterations < 1) throw std::invalid_argument("sirt: iterations must be >= 1");

  Sinogram ray_w = row_sums(geometry);
  Image pixel_w = col_sums(geometry);
  for (double& v : ray_w.data) v = v > kWeightFloor ? 1.0 / v : 0.0;
  for (double& v : pixel_w.data) v = v > kWeightFloor ? 1.0 / v : 0.0;

  Image x = initial ? *initial : Image(geometry.image_width, geometry.image_height, 0.0);
  if (initial && (x.width != geometry.image_width || x.height != geometry.image_height))
    throw std::invalid_argument("sirt: initial image does not match geometry");

  for (int k = 0; k < iterations; ++k) {
    Sinogram residual = forward_project(x, geometry);
    for (std::size_t i = 0; i < residual.data.size(); ++i)
      residual.data[i] = (sinogram.data[i] - residual.data[i]) * ray_w.data[i];
    const Image update = back_project(residual, geometry);
    for (std::size_t j = 0; j < x.data.size(); ++j)
      x.data[j] += pixel_w.data[j] * update.data[j];
  }
  return x;
}

Image cgls(const Sinogram& sinogram, const Geometry& geometry, int iterations) {
  check_sino(sinogram, geometry, "cgls");
  if (iterations < 1) throw std::invalid_argument("cgls: iterations must be >= 1");

  Image x(geometry.image_width, geometry.image_height, 0.0);
  Sinogram residual = sinogram;  // p - A*0
  Image g = back_project(residual, geometry);
  Image direction = g;
  double gamma = dot(g.data, g.data);
  if (gamma == 0.0) return x;

  for (int k = 0; k < iterations; ++k) {
    const Sinogram q = forward_project(direction, geometry);
    const double qq = dot(q.data, q.data);
    if (qq <= 0.0) break;
    const double alpha = gamma / qq;
    for (std::size_t j = 0; j < x.data.size(); ++j) x.data[j] += alpha * direction.data[j];
    for (std::size_t i = 0; i < residual.data.size(); ++i)
      residual.data[i] -= alpha * q.data[i];
    g = back_project(residual, geometry);
    const double gamma_new = dot(g.data, g.data);
    if (gamma_new == 0.0) break;
    const double beta = gamma_new / gamma;
    for (std::size_t j = 0; j < direction.data.size(); ++j)
      direction.data[j] = g.data[j] + beta * direction.data[j];
    gamma = gamma_new;
  }
  return x;
}

double operator_norm(const Geometry& geometry, int iterations) {
  Rng rng(0x5eedULL);
  Image x(geometry.image_width, geometry.image_height);
  for (double& v : x.data) v = rng.uniform(-1.0, 1.0);
  double nrm = norm2(x.data);
  for (double& v : x.data) v /= nrm;

  double sigma2 = 0.0;
  for (int k = 0; k < iterations; ++k) {
    const Sinogram ax = forward_project(x, geometry);
    Image atax = back_project(ax, geometry);
    sigma2 = dot(atax.data, x.data);  // Rayleigh quotient for A^T A
    nrm = norm2(atax.data);
    if (nrm == 0.0) return 0.0;
    for (std::size_t j = 0; j < x.data.size(); ++j) x.data[j] = atax.data[j] / nrm;
  }
  return std::sqrt(std::max(sigma2, 0.0));
}

Image tvmin(const Sinogram& sinogram, const Geometry& geometry, int iterations,
            double tv_weight) {
  check_sino(sinogram, geometry, "tvmin");
  if (iterations < 1) throw std::invalid_argument("tvmin: iterations must be >= 1");
  if (tv_weight < 0.0) throw std::invalid_argument("tvmin: tv_weight must be >= 0");

  // ||K||^2 <= ||A||^2 + 8 for the stacked (A, gradient) operator.
  const double op = operator_norm(geometry);
  const double L = std::sqrt(op * op + 8.0);
  const double tau = 0.99 / L;
  const double sigma = 0.99 / L;

  Image x(geometry.image_width, geometry.image_height, 0.0);
  Image x_bar = x;
  Sinogram y = make_sinogram(geometry, 0.0);  // dual of the data term
  std::vector<double> zx(x.size(), 0.0), zy(x.size(), 0.0);  // dual of TV
  std::vector<double> gx, gy;
  Image div(geometry.image_width, geometry.image_height, 0.0);

  for (int k = 0; k < iterations; ++k) {
    // dual ascent; prox of the data term is a scaling, the TV dual projects
    // onto the per-pixel ball of radius tv_weight
    const Sinogram ax = forward_project(x_bar, geometry);
    for (std::size_t i = 0; i < y.data.size(); ++i)
      y.data[i] = (y.data[i] + sigma * (ax.data[i] - sinogram.data[i])) / (1.0 + sigma);
    gradient(x_bar, gx, gy);
    for (std::size_t j = 0; j < zx.size(); ++j) {
      const double px = zx[j] + sigma * gx[j];
      const double py = zy[j] + sigma * gy[j];
      if (tv_weight == 0.0) {
        zx[j] = 0.0;
        zy[j] = 0.0;
      } else {
        const double mag = std::sqrt(px * px + py * py);
        const double shrink = mag > tv_weight ? tv_weight / mag : 1.0;
        zx[j] = px * shrink;
        zy[j] = py * shrink;
      }
    }
    // primal descent with nonnegativity
    const Image aty = back_project(y, geometry);
    gradient_adjoint(zx, zy, div);
    for (std::size_t j = 0; j < x.data.size(); ++j) {
      const double prev = x.data[j];
      double next = prev - tau * (aty.data[j] + div.data[j]);
      if (next < 0.0) next = 0.0;
      x.data[j] = next;
      x_bar.data[j] = 2.0 * next - prev;
    }
  }
  return x;
}

Image reconstruct(const Sinogram& sinogram, const Geometry& geometry,
                  const ReconConfig& config) {
  switch (config.method) {
    case ReconMethod::FBP:
      return fbp(sinogram, geometry);
    case ReconMethod::SIRT:
      return sirt(sinogram, geometry, config.iterations);
    case ReconMethod::CGLS:
      return cgls(sinogram, geometry, config.iterations);
    case ReconMethod::TVMIN:
      return tvmin(sinogram, geometry, config.iterations, config.tv_weight);
  }
  throw std::invalid_argument("reconstruct: unknown method");
}

double total_variation(const Image& image) {
  std::vector<double> gx, gy;
  gradient(image, gx, gy);
  double tv = 0.0;
  for (std::size_t i = 0; i < gx.size(); ++i)
    tv += std::sqrt(gx[i] * gx[i] + gy[i] * gy[i]);
  return tv;
}

}  // namespace ctstreak
