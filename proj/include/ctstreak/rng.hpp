#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace ctstreak {

// Mixes a base seed with a stream index so derived generators are
// decorrelated (splitmix64 finalizer).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Deterministic random source. All floating-point draws are built from the
// mt19937_64 bit stream explicitly, so results are identical across
// platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1).
  double uniform() { return (next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller; draws are paired and cached.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1], keeps log finite
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 6.283185307179586476925286766559 * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

  // Poisson sample: inversion by sequential search for small means, normal
  // approximation (rounded, clamped at 0) for large ones.
  long long poisson(double mean) {
    if (mean <= 0.0) return 0;
    if (mean < 30.0) {
      const double u = uniform();
      double p = std::exp(-mean);
      double cumulative = p;
      long long k = 0;
      while (u > cumulative && k < 1000000) {
        ++k;
        p *= mean / static_cast<double>(k);
        cumulative += p;
      }
      return k;
    }
    const double sample = mean + std::sqrt(mean) * normal();
    return sample <= 0.0 ? 0 : static_cast<long long>(std::llround(sample));
  }

  // Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(next_u64() % i);
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace ctstreak
