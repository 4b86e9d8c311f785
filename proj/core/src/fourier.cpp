#include "tfa/fourier.hpp"

#include <cmath>
#include <numbers>

#include "fft.hpp"
#include "tfa/error.hpp"

namespace tfa {

namespace {

std::vector<int> dims_of(const GridSpec& g) {
  return g.d == 1 ? std::vector<int>{g.n()} : std::vector<int>{g.n(), g.n()};
}

// Frequency index kappa holds k = kappa - n/2, stored at DFT slot k mod n, with the
// (-1)^k factor from the -L/2 origin offset.
void frequency_to_dft(const GridSpec& g, const std::vector<cd>& in, std::vector<cd>& out) {
  const int n = g.n();
  const int half = n / 2;
  auto sgn = [](int k) { return (k & 1) ? -1.0 : 1.0; };
  if (g.d == 1) {
    for (int a = 0; a < n; ++a) out[(a + half) % n] = sgn(a - half) * in[a];
  } else {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        out[static_cast<std::size_t>((a + half) % n) * n + (b + half) % n] =
            sgn(a - half) * sgn(b - half) * in[static_cast<std::size_t>(a) * n + b];
  }
}

void dft_to_frequency(const GridSpec& g, const std::vector<cd>& in, std::vector<cd>& out) {
  const int n = g.n();
  const int half = n / 2;
  auto sgn = [](int k) { return (k & 1) ? -1.0 : 1.0; };
  if (g.d == 1) {
    for (int a = 0; a < n; ++a) out[a] = sgn(a - half) * in[(a + half) % n];
  } else {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        out[static_cast<std::size_t>(a) * n + b] =
            sgn(a - half) * sgn(b - half) * in[static_cast<std::size_t>((a + half) % n) * n + (b + half) % n];
  }
}

}  // namespace

SampledField fourier(const SampledField& f) {
  if (f.domain() != Domain::space) throw Error(ErrorCode::invalid_argument, "fourier expects a space-domain field");
  const GridSpec& g = f.grid();
  std::vector<cd> work = f.values();
  detail::fft(work, dims_of(g), -1);
  std::vector<cd> out(work.size());
  dft_to_frequency(g, work, out);
  const double scale = std::pow(g.h() / std::sqrt(2.0 * std::numbers::pi), g.d);
  for (cd& v : out) v *= scale;
  return SampledField(g, std::move(out), Domain::frequency);
}

SampledField inverse_fourier(const SampledField& f) {
  if (f.domain() != Domain::frequency)
    throw Error(ErrorCode::invalid_argument, "inverse_fourier expects a frequency-domain field");
  const GridSpec& g = f.grid();
  std::vector<cd> work(f.size());
  frequency_to_dft(g, f.values(), work);
  detail::fft(work, dims_of(g), +1);
  const double scale = std::pow(std::sqrt(2.0 * std::numbers::pi) / g.L, g.d);
  for (cd& v : work) v *= scale;
  return SampledField(g, std::move(work), Domain::space);
}

}  // namespace tfa
