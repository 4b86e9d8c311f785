#include "tfa/random.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace tfa {

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u = uniform();
  while (u == 0.0) u = uniform();
  const double v = uniform();
  const double rad = std::sqrt(-2.0 * std::log(u));
  spare_ = rad * std::sin(2.0 * std::numbers::pi * v);
  has_spare_ = true;
  return rad * std::cos(2.0 * std::numbers::pi * v);
}

int Rng::integer(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(engine_() % span);
}

SampledField random_field(const GridSpec& grid, Rng& rng, double envelope) {
  std::vector<cd> v(grid.size());
  const SampledField probe = SampledField::zeros(grid);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point x = probe.point(i);
    double r2 = 0.0;
    for (int a = 0; a < grid.d; ++a) r2 += x[a] * x[a];
    v[i] = rng.complex_normal() * std::exp(-r2 / (2.0 * envelope * envelope));
  }
  return SampledField(grid, std::move(v));
}

SampledField random_smooth_field(const GridSpec& grid, Rng& rng, const BumpOptions& opt) {
  struct Bump {
    cd amp;
    double c[2], w, xi[2];
  };
  std::vector<Bump> bumps(opt.bumps);
  for (Bump& b : bumps) {
    b.amp = rng.complex_normal();
    for (int a = 0; a < 2; ++a) {
      b.c[a] = rng.uniform(-opt.center, opt.center);
      b.xi[a] = rng.uniform(-opt.frequency, opt.frequency);
    }
    b.w = rng.uniform(opt.width_min, opt.width_max);
  }
  return sample(grid, [&](const Point& x) {
    cd s{};
    for (const Bump& b : bumps) {
      double r2 = 0.0, ph = 0.0;
      for (int a = 0; a < grid.d; ++a) {
        r2 += (x[a] - b.c[a]) * (x[a] - b.c[a]);
        ph += b.xi[a] * x[a];
      }
      s += b.amp * std::exp(-r2 / (2.0 * b.w * b.w)) * std::polar(1.0, ph);
    }
    return s;
  });
}

PhaseField random_smooth_symbol(const PhaseGrid& grid, Rng& rng, const BumpOptions& opt) {
  struct Bump {
    cd amp;
    double x, xi, wx, wxi;
  };
  std::vector<Bump> bumps(opt.bumps);
  for (Bump& b : bumps) {
    b.amp = rng.complex_normal();
    b.x = rng.uniform(-opt.center, opt.center);
    b.xi = rng.uniform(-opt.center, opt.center);
    b.wx = rng.uniform(opt.width_min, opt.width_max);
    b.wxi = rng.uniform(opt.width_min, opt.width_max);
  }
  return sample(grid, [&](double x, double xi) {
    cd s{};
    for (const Bump& b : bumps) {
      const double ex = (x - b.x) / b.wx, exi = (xi - b.xi) / b.wxi;
      s += b.amp * std::exp(-0.5 * (ex * ex + exi * exi));
    }
    return s;
  });
}

PhaseField random_phase_field(const PhaseGrid& grid, Rng& rng, double envelope) {
  std::vector<cd> v(grid.size());
  for (int i = 0; i < grid.x.n; ++i)
    for (int k = 0; k < grid.xi.n; ++k) {
      const double x = grid.x.coord(i), xi = grid.xi.coord(k);
      v[static_cast<std::size_t>(i) * grid.xi.n + k] =
          rng.complex_normal() * std::exp(-(x * x + xi * xi) / (2.0 * envelope * envelope));
    }
  return PhaseField(grid, std::move(v));
}

}  // namespace tfa
