#pragma once

#include <complex>
#include <vector>

namespace wright {

// In-place radix-2 Cooley-Tukey transform; size must be a power of two.
// inverse = true applies the 1/n-normalized inverse transform.
void fft_inplace(std::vector<std::complex<double>>& a, bool inverse);

// Circular convolution (sum_j a_j b_{(i-j) mod n}) of two equal-length
// power-of-two real sequences via the FFT.
std::vector<double> periodic_convolve(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace wright
