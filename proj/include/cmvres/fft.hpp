#ifndef CMVRES_FFT_HPP
#define CMVRES_FFT_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace cmvres {

bool is_power_of_two(std::size_t n);

// In-place radix-2 transform, data.size() must be a power of two.
// Forward: X_k = sum_j x_j e^{-2*pi*i*jk/n}.  Inverse uses e^{+2*pi*i*jk/n}
// and applies no 1/n scaling; callers normalize as needed.
void fft_inplace(std::vector<std::complex<double>>& data, bool inverse);

}  // namespace cmvres

#endif
