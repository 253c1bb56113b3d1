#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace ctstreak {

// In-place iterative radix-2 FFT. Length must be a power of two. The
// inverse transform includes the 1/n scale.
void fft(std::vector<std::complex<double>>& a, bool inverse);

std::size_t next_pow2(std::size_t n);

}  // namespace ctstreak
