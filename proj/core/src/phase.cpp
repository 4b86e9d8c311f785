#include "tfa/phase.hpp"

#include <cmath>
#include <numbers>

#include "tfa/error.hpp"
#include "tfa/norms.hpp"

namespace tfa {

namespace {

int wrap(long long i, int n) {
  long long r = i % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

int lattice_shift(double offset, const Axis& axis) {
  const double k = offset / axis.step;
  const double r = std::round(k);
  if (std::abs(k - r) > 1e-9 * std::max(1.0, std::abs(k)))
    throw Error(ErrorCode::off_grid, "phase-space shift is not on the lattice");
  return static_cast<int>(r);
}

}  // namespace

bool Axis::centered() const {
  if (n <= 0 || n % 2 != 0) return false;
  return std::abs(coord(n / 2)) <= 1e-12 * std::max(1.0, std::abs(start));
}

PhaseGrid PhaseGrid::stft(const GridSpec& g) {
  if (g.d != 1) throw Error(ErrorCode::invalid_argument, "phase grids are built over d = 1 grids");
  const int n = g.n();
  const double dxi = 2.0 * std::numbers::pi / g.L;
  return PhaseGrid{PhaseLayout::stft, Axis{n, -0.5 * g.L, g.h()}, Axis{n, -0.5 * n * dxi, dxi}, g};
}

PhaseGrid PhaseGrid::symbol(const GridSpec& g) {
  if (g.d != 1) throw Error(ErrorCode::invalid_argument, "phase grids are built over d = 1 grids");
  const int n = g.n();
  const double dxi = std::numbers::pi / g.L;
  return PhaseGrid{PhaseLayout::symbol, Axis{2 * n, -0.5 * g.L, 0.5 * g.h()}, Axis{2 * n, -n * dxi, dxi}, g};
}

PhaseGrid PhaseGrid::square(int n, double step) {
  if (n < 2 || n % 2 != 0) throw Error(ErrorCode::invalid_grid, "square phase grid needs an even size");
  if (!(step > 0.0)) throw Error(ErrorCode::invalid_grid, "phase grid spacing must be positive");
  const Axis a{n, -0.5 * n * step, step};
  return PhaseGrid{PhaseLayout::square, a, a, std::nullopt};
}

std::string to_string(PhaseLayout layout) {
  switch (layout) {
    case PhaseLayout::stft: return "stft";
    case PhaseLayout::symbol: return "symbol";
    case PhaseLayout::square: return "square";
  }
  return "square";
}

PhaseLayout parse_layout(const std::string& s) {
  if (s == "stft") return PhaseLayout::stft;
  if (s == "symbol") return PhaseLayout::symbol;
  if (s == "square") return PhaseLayout::square;
  throw Error(ErrorCode::parse, "phase layout '" + s + "'");
}

PhaseField::PhaseField(PhaseGrid grid, std::vector<cd> values) : grid_(std::move(grid)), values_(std::move(values)) {
  if (values_.size() != grid_.size()) throw Error(ErrorCode::invalid_argument, "phase field size mismatch");
  for (const cd& v : values_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw Error(ErrorCode::numerical, "phase field value is not finite");
}

PhaseField PhaseField::zeros(const PhaseGrid& grid) { return PhaseField(grid, std::vector<cd>(grid.size())); }

bool PhaseField::is_zero() const {
  for (const cd& v : values_)
    if (v != cd{}) return false;
  return true;
}

PhaseField sample(const PhaseGrid& grid, const std::function<cd(double, double)>& fn) {
  std::vector<cd> v(grid.size());
  for (int i = 0; i < grid.x.n; ++i)
    for (int k = 0; k < grid.xi.n; ++k)
      v[static_cast<std::size_t>(i) * grid.xi.n + k] = fn(grid.x.coord(i), grid.xi.coord(k));
  return PhaseField(grid, std::move(v));
}

void require_same_grid(const PhaseField& a, const PhaseField& b) {
  if (!(a.grid() == b.grid())) throw Error(ErrorCode::grid_mismatch, "phase fields live on different grids");
}

PhaseField operator+(const PhaseField& a, const PhaseField& b) {
  require_same_grid(a, b);
  std::vector<cd> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] + b[i];
  return PhaseField(a.grid(), std::move(v));
}

PhaseField operator-(const PhaseField& a, const PhaseField& b) {
  require_same_grid(a, b);
  std::vector<cd> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] - b[i];
  return PhaseField(a.grid(), std::move(v));
}

PhaseField operator*(cd s, const PhaseField& a) {
  std::vector<cd> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = s * a[i];
  return PhaseField(a.grid(), std::move(v));
}

PhaseField abs(const PhaseField& a) {
  std::vector<cd> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::abs(a[i]);
  return PhaseField(a.grid(), std::move(v));
}

double lp_norm(const PhaseField& a, double p) {
  validate_exponent(p, "p");
  PowerSum acc(p);
  for (const cd& v : a.values()) acc.add(std::abs(v));
  return acc.result(a.grid().cell_area());
}

cd integrate(const PhaseField& a) {
  cd s{};
  for (const cd& v : a.values()) s += v;
  return a.grid().cell_area() * s;
}

PhaseField reflect(const PhaseField& a) {
  const PhaseGrid& g = a.grid();
  if (!g.x.centered() || !g.xi.centered()) throw Error(ErrorCode::invalid_grid, "reflection needs centered axes");
  std::vector<cd> v(a.size());
  for (int i = 0; i < g.x.n; ++i)
    for (int k = 0; k < g.xi.n; ++k) v[a.index(i, k)] = a.at(wrap(g.x.n - i, g.x.n), wrap(g.xi.n - k, g.xi.n));
  return PhaseField(g, std::move(v));
}

PhaseField translate(const PhaseField& a, double x0, double xi0) {
  const PhaseGrid& g = a.grid();
  const int sx = lattice_shift(x0, g.x);
  const int sk = lattice_shift(xi0, g.xi);
  std::vector<cd> v(a.size());
  for (int i = 0; i < g.x.n; ++i)
    for (int k = 0; k < g.xi.n; ++k) v[a.index(i, k)] = a.at(wrap(i - sx, g.x.n), wrap(k - sk, g.xi.n));
  return PhaseField(g, std::move(v));
}

PhaseField discrete_delta(const PhaseGrid& grid) {
  if (!grid.x.centered() || !grid.xi.centered()) throw Error(ErrorCode::invalid_grid, "delta needs centered axes");
  std::vector<cd> v(grid.size());
  v[static_cast<std::size_t>(grid.x.n / 2) * grid.xi.n + grid.xi.n / 2] = 1.0 / grid.cell_area();
  return PhaseField(grid, std::move(v));
}

}  // namespace tfa
