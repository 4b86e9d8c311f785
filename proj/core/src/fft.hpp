#pragma once

#include <complex>
#include <vector>

namespace tfa::detail {

// In-place unnormalized DFT over a row-major array with the given axis lengths.
// sign -1: sum x_j e^{-2 pi i jk/n}; sign +1: e^{+2 pi i jk/n}.
void fft(std::vector<std::complex<double>>& data, const std::vector<int>& dims, int sign);

}  // namespace tfa::detail
