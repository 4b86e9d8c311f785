#include "tfa/field.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "tfa/error.hpp"
#include "tfa/norms.hpp"

namespace tfa {

namespace {

int wrap(long long i, int n) {
  long long r = i % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

int grid_shift(double offset, double step, const char* what) {
  const double k = offset / step;
  const double r = std::round(k);
  if (std::abs(k - r) > 1e-9 * std::max(1.0, std::abs(k)))
    throw Error(ErrorCode::off_grid, std::string(what) + " is not a multiple of the grid spacing");
  return static_cast<int>(r);
}

}  // namespace

SampledField::SampledField(GridSpec grid, std::vector<cd> values, Domain domain)
    : grid_(grid), domain_(domain), values_(std::move(values)) {
  make_grid(grid_.d, grid_.m, grid_.L);
  if (values_.size() != grid_.size())
    throw Error(ErrorCode::invalid_argument, "field has " + std::to_string(values_.size()) +
                                                 " values, grid expects " + std::to_string(grid_.size()));
  for (const cd& v : values_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw Error(ErrorCode::numerical, "field value is not finite");
}

SampledField SampledField::zeros(const GridSpec& grid, Domain domain) {
  return SampledField(grid, std::vector<cd>(grid.size()), domain);
}

std::size_t SampledField::index(int j0, int j1) const {
  return grid_.d == 1 ? static_cast<std::size_t>(j0)
                      : static_cast<std::size_t>(j0) * grid_.n() + static_cast<std::size_t>(j1);
}

double SampledField::axis_coord(int j) const {
  if (domain_ == Domain::space) return grid_.coord(j);
  return 2.0 * std::numbers::pi * (j - grid_.n() / 2) / grid_.L;
}

Point SampledField::point(std::size_t flat) const {
  const int n = grid_.n();
  if (grid_.d == 1) return {axis_coord(static_cast<int>(flat)), 0.0};
  return {axis_coord(static_cast<int>(flat / n)), axis_coord(static_cast<int>(flat % n))};
}

double SampledField::cell_volume() const {
  if (domain_ == Domain::space) return grid_.cell_volume();
  return std::pow(2.0 * std::numbers::pi / grid_.L, grid_.d);
}

bool SampledField::is_zero() const {
  for (const cd& v : values_)
    if (v != cd{}) return false;
  return true;
}

SampledField sample(const GridSpec& grid, const std::function<cd(const Point&)>& fn, Domain domain) {
  SampledField proto = SampledField::zeros(grid, domain);
  std::vector<cd> v(grid.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = fn(proto.point(i));
  return SampledField(grid, std::move(v), domain);
}

void require_same_grid(const SampledField& a, const SampledField& b) {
  if (!(a.grid() == b.grid()) || a.domain() != b.domain())
    throw Error(ErrorCode::grid_mismatch, "fields live on different grids");
}

SampledField operator+(const SampledField& a, const SampledField& b) {
  require_same_grid(a, b);
  std::vector<cd> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] + b[i];
  return SampledField(a.grid(), std::move(v), a.domain());
}

SampledField operator-(const SampledField& a, const SampledField& b) {
  require_same_grid(a, b);
  std::vector<cd> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] - b[i];
  return SampledField(a.grid(), std::move(v), a.domain());
}

SampledField operator*(cd s, const SampledField& a) {
  std::vector<cd> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = s * a[i];
  return SampledField(a.grid(), std::move(v), a.domain());
}

SampledField pointwise(const SampledField& a, const SampledField& b) {
  require_same_grid(a, b);
  std::vector<cd> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] * b[i];
  return SampledField(a.grid(), std::move(v), a.domain());
}

SampledField conj(const SampledField& a) {
  std::vector<cd> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::conj(a[i]);
  return SampledField(a.grid(), std::move(v), a.domain());
}

cd integrate(const SampledField& f) {
  cd s{};
  for (const cd& v : f.values()) s += v;
  return f.cell_volume() * s;
}

double lp_norm(const SampledField& f, double p, const Weight& w) {
  validate_exponent(p, "p");
  PowerSum acc(p);
  const bool weighted = !w.is_constant();
  for (std::size_t i = 0; i < f.size(); ++i) {
    double mag = std::abs(f[i]);
    if (weighted) {
      const Point x = f.point(i);
      mag *= w.omega(std::span<const double>(x.data(), f.grid().d));
    }
    acc.add(mag);
  }
  return acc.result(f.cell_volume());
}

cd inner(const SampledField& f, const SampledField& g) {
  require_same_grid(f, g);
  cd s{};
  for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * std::conj(g[i]);
  return f.cell_volume() * s;
}

SampledField translate(const SampledField& f, const Point& x0) {
  if (f.domain() != Domain::space) throw Error(ErrorCode::invalid_argument, "translate expects a space-domain field");
  const GridSpec& g = f.grid();
  const int n = g.n();
  const int s0 = grid_shift(x0[0], g.h(), "shift");
  const int s1 = g.d == 2 ? grid_shift(x0[1], g.h(), "shift") : 0;
  if (g.d == 1 && x0[1] != 0.0) throw Error(ErrorCode::off_grid, "second shift component on a 1-d grid");
  std::vector<cd> v(f.size());
  if (g.d == 1) {
    for (int j = 0; j < n; ++j) v[j] = f.at(wrap(j - s0, n));
  } else {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) v[f.index(a, b)] = f.at(wrap(a - s0, n), wrap(b - s1, n));
  }
  return SampledField(g, std::move(v), f.domain());
}

SampledField modulate(const SampledField& f, const Point& xi0) {
  if (f.domain() != Domain::space) throw Error(ErrorCode::invalid_argument, "modulate expects a space-domain field");
  const GridSpec& g = f.grid();
  const double step = 2.0 * std::numbers::pi / g.L;
  const int k0 = grid_shift(xi0[0], step, "frequency");
  const int k1 = g.d == 2 ? grid_shift(xi0[1], step, "frequency") : 0;
  if (g.d == 1 && xi0[1] != 0.0) throw Error(ErrorCode::off_grid, "second frequency component on a 1-d grid");
  std::vector<cd> v(f.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point x = f.point(i);
    const double phase = x[0] * k0 * step + x[1] * k1 * step;
    v[i] = f[i] * std::polar(1.0, -phase);
  }
  return SampledField(g, std::move(v), f.domain());
}

SampledField reflect(const SampledField& f) {
  const GridSpec& g = f.grid();
  const int n = g.n();
  std::vector<cd> v(f.size());
  if (g.d == 1) {
    for (int j = 0; j < n; ++j) v[j] = f.at(wrap(n - j, n));
  } else {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) v[f.index(a, b)] = f.at(wrap(n - a, n), wrap(n - b, n));
  }
  return SampledField(g, std::move(v), f.domain());
}

SampledField indicator(const GridSpec& grid, double a, double b) {
  return sample(grid, [&](const Point& x) {
    bool in = x[0] >= a && x[0] < b;
    if (grid.d == 2) in = in && x[1] >= a && x[1] < b;
    return cd(in ? 1.0 : 0.0);
  });
}

SampledField gaussian(const GridSpec& grid, double width, double center, double frequency) {
  return sample(grid, [&](const Point& x) {
    double r2 = (x[0] - center) * (x[0] - center);
    if (grid.d == 2) r2 += (x[1] - center) * (x[1] - center);
    return std::exp(-0.5 * r2 / (width * width)) * std::polar(1.0, frequency * x[0]);
  });
}

SampledField discrete_delta(const GridSpec& grid) {
  SampledField z = SampledField::zeros(grid);
  std::vector<cd> v = z.values();
  const int c = grid.n() / 2;
  v[z.index(c, grid.d == 2 ? c : 0)] = 1.0 / grid.cell_volume();
  return SampledField(grid, std::move(v));
}

}  // namespace tfa
