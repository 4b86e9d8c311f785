#include "tfa/twist.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "fft.hpp"
#include "tfa/error.hpp"

namespace tfa {

namespace {

// result_i = cell * sum_j a_{(i - j + c)} b_j with c the origin index; computed as a cyclic
// FFT product then rotated by c along every axis.
std::vector<cd> centered_cyclic(const std::vector<cd>& a, const std::vector<cd>& b, const std::vector<int>& dims,
                                double cell) {
  std::vector<cd> fa = a, fb = b;
  detail::fft(fa, dims, -1);
  detail::fft(fb, dims, -1);
  for (std::size_t i = 0; i < fa.size(); ++i) fa[i] *= fb[i];
  detail::fft(fa, dims, +1);
  const double scale = cell / static_cast<double>(fa.size());
  std::vector<cd> out(fa.size());
  if (dims.size() == 1) {
    const int n = dims[0];
    for (int i = 0; i < n; ++i) out[i] = scale * fa[(i + n / 2) % n];
  } else {
    const int n0 = dims[0], n1 = dims[1];
    for (int i = 0; i < n0; ++i)
      for (int j = 0; j < n1; ++j)
        out[static_cast<std::size_t>(i) * n1 + j] =
            scale * fa[static_cast<std::size_t>((i + n0 / 2) % n0) * n1 + (j + n1 / 2) % n1];
  }
  return out;
}

}  // namespace

SampledField convolve(const SampledField& f, const SampledField& g) {
  require_same_grid(f, g);
  if (f.domain() != Domain::space) throw Error(ErrorCode::invalid_argument, "convolve expects space-domain fields");
  const GridSpec& gs = f.grid();
  const std::vector<int> dims = gs.d == 1 ? std::vector<int>{gs.n()} : std::vector<int>{gs.n(), gs.n()};
  return SampledField(gs, centered_cyclic(f.values(), g.values(), dims, gs.cell_volume()));
}

PhaseField convolve(const PhaseField& a, const PhaseField& b) {
  require_same_grid(a, b);
  const PhaseGrid& g = a.grid();
  if (!g.x.centered() || !g.xi.centered()) throw Error(ErrorCode::invalid_grid, "convolution needs centered axes");
  return PhaseField(g, centered_cyclic(a.values(), b.values(), {g.x.n, g.xi.n}, g.cell_area()));
}

std::pair<double, double> young_check(const SampledField& f, const SampledField& g, const AmalgamSpace& B,
                                      const AmalgamSpace& M) {
  const double lhs = amalgam_norm(convolve(f, g), M);
  const double constant = std::pow(2.0, f.grid().d) * B.weight.c_v();
  return {lhs, constant * amalgam_norm(f, B) * amalgam_norm(g, M)};
}

bool symplectic_compatible(const PhaseGrid& g) {
  const double slack = std::numbers::pi * (1.0 + 1e-9);
  return g.x.n == g.xi.n && g.xi.period() * g.x.step <= slack && g.x.period() * g.xi.step <= slack;
}

PhaseField symplectic_ft(const PhaseField& a) {
  const PhaseGrid& g = a.grid();
  if (!symplectic_compatible(g))
    throw Error(ErrorCode::incompatible_axes, "symplectic Fourier transform needs equal sizes and period*step <= pi");
  const int nx = g.x.n, nk = g.xi.n;
  using Mat = Eigen::Matrix<cd, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  Mat A(nx, nk), ey(nx, nk), ex(nx, nk);
  for (int j = 0; j < nx; ++j)
    for (int l = 0; l < nk; ++l) A(j, l) = a.at(j, l);
  // ey(j, b) = e^{2 i y_j xi_b}, ex(a, l) = e^{-2 i x_a eta_l}
  for (int j = 0; j < nx; ++j)
    for (int b = 0; b < nk; ++b) ey(j, b) = std::polar(1.0, 2.0 * g.x.coord(j) * g.xi.coord(b));
  for (int i = 0; i < nx; ++i)
    for (int l = 0; l < nk; ++l) ex(i, l) = std::polar(1.0, -2.0 * g.x.coord(i) * g.xi.coord(l));
  const Mat out = (g.cell_area() / std::numbers::pi) * (ex * A.transpose() * ey);
  return PhaseField(g, std::vector<cd>(out.data(), out.data() + out.size()));
}

PhaseField twisted_convolve(const PhaseField& a, const PhaseField& b) {
  require_same_grid(a, b);
  const PhaseGrid& g = a.grid();
  if (!g.x.centered() || !g.xi.centered())
    throw Error(ErrorCode::invalid_grid, "twisted convolution needs centered axes");
  const int nx = g.x.n, nk = g.xi.n;
  const int cx = nx / 2, ck = nk / 2;
  const double scale = std::sqrt(2.0 / std::numbers::pi) * g.cell_area();
  std::vector<cd> out(g.size());
  std::vector<cd> ey(nx), ex(nk);
  for (int i = 0; i < nx; ++i) {
    const double x = g.x.coord(i);
    for (int l = 0; l < nk; ++l) ex[l] = std::polar(1.0, -2.0 * x * g.xi.coord(l));
    for (int k = 0; k < nk; ++k) {
      const double xi = g.xi.coord(k);
      for (int j = 0; j < nx; ++j) ey[j] = std::polar(1.0, 2.0 * g.x.coord(j) * xi);
      cd acc{};
      for (int j = 0; j < nx; ++j) {
        const int dj = ((i - j + cx) % nx + nx) % nx;
        const cd* arow = &a.values()[static_cast<std::size_t>(dj) * nk];
        const cd* brow = &b.values()[static_cast<std::size_t>(j) * nk];
        cd row{};
        for (int l = 0; l < nk; ++l) {
          const int dl = ((k - l + ck) % nk + nk) % nk;
          row += arow[dl] * brow[l] * ex[l];
        }
        acc += row * ey[j];
      }
      out[static_cast<std::size_t>(i) * nk + k] = scale * acc;
    }
  }
  return PhaseField(g, std::move(out));
}

std::pair<double, double> twisted_young_check(const PhaseField& a, const PhaseField& b, double r, double p, double q,
                                              const Weight& omega, const Weight& v) {
  const AmalgamSpace M = AmalgamSpace::make(p, q, omega);
  const double lhs = amalgam_norm(twisted_convolve(a, b), M);
  const double constant = 4.0 * std::sqrt(std::numbers::pi / 2.0) * v.c_v();
  return {lhs, constant * amalgam_norm(a, AmalgamSpace::make(1.0, r, v)) * amalgam_norm(b, M)};
}

}  // namespace tfa
