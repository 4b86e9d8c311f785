#include "fft.hpp"

#include <fftw3.h>

#include <cstddef>
#include <functional>
#include <numeric>

#include "tfa/error.hpp"

namespace tfa::detail {

void fft(std::vector<std::complex<double>>& data, const std::vector<int>& dims, int sign) {
  const std::size_t total =
      std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
  if (total != data.size() || data.empty()) throw Error(ErrorCode::invalid_argument, "fft size mismatch");
  auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
  // ESTIMATE plans leave the buffer untouched; UNALIGNED keeps the algorithm independent of
  // allocation addresses so repeated runs are bit-identical.
  fftw_plan plan = fftw_plan_dft(static_cast<int>(dims.size()), dims.data(), ptr, ptr,
                                 sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                                 FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (plan == nullptr) throw Error(ErrorCode::numerical, "fftw planning failed");
  fftw_execute(plan);
  fftw_destroy_plan(plan);
}

}  // namespace tfa::detail
