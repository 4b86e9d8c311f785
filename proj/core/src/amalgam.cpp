#include "tfa/amalgam.hpp"

#include <algorithm>
#include <cmath>

#include "tfa/error.hpp"
#include "tfa/twist.hpp"

namespace tfa {

namespace {

// Cube labels along one axis.
std::vector<int> axis_bins(const std::vector<double>& coords, int& lo, int& count) {
  std::vector<int> bins(coords.size());
  lo = 0;
  int hi = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    // guard against x = k - 1e-17 style roundoff of exact lattice points
    bins[i] = static_cast<int>(std::floor(coords[i] + 1e-12));
    if (i == 0 || bins[i] < lo) lo = bins[i];
    if (i == 0 || bins[i] > hi) hi = bins[i];
  }
  for (int& b : bins) b -= lo;
  count = hi - lo + 1;
  return bins;
}

CubeNorms binned_norms(const std::vector<cd>& values, const std::vector<std::vector<double>>& axes,
                       double cell, double p) {
  validate_exponent(p, "p");
  const std::size_t dims = axes.size();
  std::vector<std::vector<int>> bins(dims);
  std::vector<int> lo(dims), count(dims);
  for (std::size_t a = 0; a < dims; ++a) bins[a] = axis_bins(axes[a], lo[a], count[a]);

  std::size_t cubes = 1;
  for (int c : count) cubes *= static_cast<std::size_t>(c);
  std::vector<PowerSum> acc(cubes, PowerSum(p));

  // Flat sample index is row-major over the axes.
  const std::size_t n0 = axes[0].size();
  const std::size_t n1 = dims == 2 ? axes[1].size() : 1;
  for (std::size_t i = 0; i < n0; ++i) {
    for (std::size_t j = 0; j < n1; ++j) {
      std::size_t cube = static_cast<std::size_t>(bins[0][i]);
      if (dims == 2) cube = cube * count[1] + bins[1][j];
      acc[cube].add(std::abs(values[i * n1 + j]));
    }
  }

  CubeNorms out;
  for (std::size_t c = 0; c < cubes; ++c) {
    if (acc[c].empty()) continue;
    Point corner{};
    if (dims == 1) {
      corner[0] = lo[0] + static_cast<int>(c);
    } else {
      corner[0] = lo[0] + static_cast<int>(c / count[1]);
      corner[1] = lo[1] + static_cast<int>(c % count[1]);
    }
    out.corners.push_back(corner);
    out.local.push_back(acc[c].result(cell));
  }
  return out;
}

double weighted_lq(const CubeNorms& cubes, double q, const Weight& w, int dim) {
  validate_exponent(q, "q");
  PowerSum acc(q);
  const bool weighted = !w.is_constant();
  for (std::size_t c = 0; c < cubes.local.size(); ++c) {
    double v = cubes.local[c];
    if (weighted) v *= w.omega(std::span<const double>(cubes.corners[c].data(), dim));
    acc.add(v);
  }
  return acc.result(1.0);
}

std::vector<std::vector<double>> field_axes(const SampledField& f) {
  const int n = f.grid().n();
  std::vector<double> axis(n);
  for (int j = 0; j < n; ++j) axis[j] = f.axis_coord(j);
  if (f.grid().d == 1) return {axis};
  return {axis, axis};
}

std::vector<std::vector<double>> phase_axes(const PhaseGrid& g) {
  std::vector<double> x(g.x.n), xi(g.xi.n);
  for (int i = 0; i < g.x.n; ++i) x[i] = g.x.coord(i);
  for (int k = 0; k < g.xi.n; ++k) xi[k] = g.xi.coord(k);
  return {x, xi};
}

void check_weight_dim(const Weight& w, int dim) {
  if (!w.is_constant() && w.dim() != dim)
    throw Error(ErrorCode::invalid_argument, "weight dimension does not match the field");
}

}  // namespace

CubeNorms cube_norms(const SampledField& f, double p) {
  return binned_norms(f.values(), field_axes(f), f.cell_volume(), p);
}

CubeNorms cube_norms(const PhaseField& a, double p) {
  return binned_norms(a.values(), phase_axes(a.grid()), a.grid().cell_area(), p);
}

double amalgam_norm(const SampledField& f, const AmalgamSpace& space) {
  space.params.validate();
  check_weight_dim(space.weight, f.grid().d);
  return weighted_lq(cube_norms(f, space.params.p), space.params.q, space.weight, f.grid().d);
}

double amalgam_norm(const PhaseField& a, const AmalgamSpace& space) {
  space.params.validate();
  check_weight_dim(space.weight, 2);
  return weighted_lq(cube_norms(a, space.params.p), space.params.q, space.weight, 2);
}

std::pair<double, double> amalgam_equals_lebesgue_check(const SampledField& f, double p, const Weight& w) {
  if (std::isinf(p)) throw Error(ErrorCode::invalid_argument, "p must be finite");
  const double amalgam = amalgam_norm(f, AmalgamSpace::make(p, p, w));
  PowerSum acc(p);
  const int d = f.grid().d;
  for (std::size_t i = 0; i < f.size(); ++i) {
    double mag = std::abs(f[i]);
    if (!w.is_constant()) {
      const Point x = f.point(i);
      Point corner{std::floor(x[0] + 1e-12), std::floor(x[1] + 1e-12)};
      mag *= w.omega(std::span<const double>(corner.data(), d));
    }
    acc.add(mag);
  }
  return {amalgam, acc.result(f.cell_volume())};
}

std::pair<double, double> strictness_witness(std::span<const double> t, std::size_t J, double r) {
  validate_exponent(r, "r");
  if (J > t.size()) throw Error(ErrorCode::invalid_argument, "J exceeds the sequence length");
  PowerSum l1(1.0), wl(r);
  for (std::size_t j = 0; j < J; ++j) {
    l1.add(std::abs(t[j]));
    wl.add(std::abs(t[j]));
  }
  return {l1.result(1.0), wl.result(1.0)};
}

SampledField gaussian_mollifier(const GridSpec& grid, double eps) {
  if (!(eps > 0.0)) throw Error(ErrorCode::invalid_argument, "mollifier width must be positive");
  SampledField raw = sample(grid, [&](const Point& x) {
    double r2 = x[0] * x[0];
    if (grid.d == 2) r2 += x[1] * x[1];
    return cd(std::exp(-0.5 * r2 / (eps * eps)));
  });
  const double mass = integrate(raw).real();
  return cd(1.0 / mass) * raw;
}

std::vector<double> linfty_ladder(const GridSpec& grid) {
  std::vector<double> eps;
  for (int k = 0; k <= 4; ++k) eps.push_back(64.0 * grid.h() / (1 << k));
  return eps;
}

std::vector<double> linfty_failure_witness(const SampledField& f, std::span<const double> eps) {
  std::vector<double> out;
  out.reserve(eps.size());
  for (double e : eps) {
    const SampledField smooth = convolve(f, gaussian_mollifier(f.grid(), e));
    out.push_back(lp_norm(f - smooth, kInf));
  }
  return out;
}

}  // namespace tfa
