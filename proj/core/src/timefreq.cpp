#include "tfa/timefreq.hpp"

#include <cmath>
#include <numbers>

#include "tfa/error.hpp"
#include "tfa/fourier.hpp"
#include "tfa/norms.hpp"

namespace tfa {

SampledField gaussian_window(const GridSpec& grid, double width, double center, double frequency) {
  if (grid.d != 1) throw Error(ErrorCode::invalid_argument, "windows are 1-d");
  const double norm = 1.0 / (std::pow(std::numbers::pi, 0.25) * std::sqrt(width));
  return cd(norm) * gaussian(grid, width, center, frequency);
}

PhaseField stft(const SampledField& f, const SampledField& window) {
  require_same_grid(f, window);
  const GridSpec& g = f.grid();
  if (g.d != 1) throw Error(ErrorCode::invalid_argument, "the STFT is implemented for d = 1");
  if (f.domain() != Domain::space) throw Error(ErrorCode::invalid_argument, "stft expects a space-domain field");
  if (window.is_zero()) throw Error(ErrorCode::zero_window, "window is identically zero");
  const int n = g.n();
  const PhaseGrid pg = PhaseGrid::stft(g);
  std::vector<cd> out(pg.size());
  std::vector<cd> slice(n);
  for (int i = 0; i < n; ++i) {
    // phi(y_j - x_i) sits at index j - i + n/2 (mod n)
    for (int j = 0; j < n; ++j) slice[j] = f[j] * std::conj(window[((j - i + n / 2) % n + n) % n]);
    const SampledField col = fourier(SampledField(g, slice));
    for (int k = 0; k < n; ++k) out[static_cast<std::size_t>(i) * n + k] = col[k];
  }
  return PhaseField(pg, std::move(out));
}

PhaseField tphi(const SampledField& f, const SampledField& window) {
  const PhaseField V = stft(f, window);
  const PhaseGrid& g = V.grid();
  std::vector<cd> out(V.size());
  for (int i = 0; i < g.x.n; ++i)
    for (int k = 0; k < g.xi.n; ++k)
      out[V.index(i, k)] = V.at(i, k) * std::polar(1.0, g.x.coord(i) * g.xi.coord(k));
  return PhaseField(g, std::move(out));
}

double mixed_norm(const PhaseField& F, double p, double q, const Weight& omega) {
  validate_exponent(p, "p");
  validate_exponent(q, "q");
  const PhaseGrid& g = F.grid();
  const bool weighted = !omega.is_constant();
  if (weighted && omega.dim() != 2) throw Error(ErrorCode::invalid_argument, "phase weight must be 2-d");
  PowerSum outer(q);
  for (int k = 0; k < g.xi.n; ++k) {
    PowerSum inner(p);
    for (int i = 0; i < g.x.n; ++i) {
      double mag = std::abs(F.at(i, k));
      if (weighted) {
        const double X[2] = {g.x.coord(i), g.xi.coord(k)};
        mag *= omega.omega(X);
      }
      inner.add(mag);
    }
    outer.add(inner.result(g.x.step));
  }
  return outer.result(g.xi.step);
}

namespace {

// G(xi, x) = V(x, xi) omega(x, xi): inner L^q over xi, outer L^p over x.
double w_type(const PhaseField& V, double p, double q, const Weight& omega) {
  const PhaseGrid& g = V.grid();
  const bool weighted = !omega.is_constant();
  PowerSum outer(p);
  for (int i = 0; i < g.x.n; ++i) {
    PowerSum inner(q);
    for (int k = 0; k < g.xi.n; ++k) {
      double mag = std::abs(V.at(i, k));
      if (weighted) {
        const double X[2] = {g.x.coord(i), g.xi.coord(k)};
        mag *= omega.omega(X);
      }
      inner.add(mag);
    }
    outer.add(inner.result(g.xi.step));
  }
  return outer.result(g.x.step);
}

}  // namespace

double modulation_norm_of(const PhaseField& V, const ModulationParams& params) {
  validate_exponent(params.p, "p");
  validate_exponent(params.q, "q");
  if (params.kind == ModulationKind::M) return mixed_norm(V, params.p, params.q, params.omega);
  return w_type(V, params.p, params.q, params.omega);
}

double modulation_norm(const SampledField& f, const SampledField& window, const ModulationParams& params) {
  return modulation_norm_of(stft(f, window), params);
}

}  // namespace tfa
