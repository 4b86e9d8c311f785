#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "tfa/grid.hpp"
#include "tfa/weight.hpp"

namespace tfa {

using cd = std::complex<double>;

// Space samples sit at x_j = -L/2 + j h; frequency samples at xi_k = 2 pi (k - n/2) / L.
enum class Domain { space, frequency };

class SampledField {
 public:
  SampledField() = default;
  SampledField(GridSpec grid, std::vector<cd> values, Domain domain = Domain::space);

  static SampledField zeros(const GridSpec& grid, Domain domain = Domain::space);

  const GridSpec& grid() const { return grid_; }
  Domain domain() const { return domain_; }
  const std::vector<cd>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  cd operator[](std::size_t i) const { return values_[i]; }
  cd at(int j0, int j1 = 0) const { return values_[index(j0, j1)]; }
  std::size_t index(int j0, int j1 = 0) const;

  double axis_coord(int j) const;
  Point point(std::size_t flat) const;
  double cell_volume() const;
  bool is_zero() const;

 private:
  GridSpec grid_{};
  Domain domain_ = Domain::space;
  std::vector<cd> values_;
};

SampledField sample(const GridSpec& grid, const std::function<cd(const Point&)>& fn,
                    Domain domain = Domain::space);

SampledField operator+(const SampledField& a, const SampledField& b);
SampledField operator-(const SampledField& a, const SampledField& b);
SampledField operator*(cd s, const SampledField& a);
SampledField pointwise(const SampledField& a, const SampledField& b);
SampledField conj(const SampledField& a);
void require_same_grid(const SampledField& a, const SampledField& b);

cd integrate(const SampledField& f);
double lp_norm(const SampledField& f, double p, const Weight& w = Weight{});

SampledField translate(const SampledField& f, const Point& x0);
SampledField modulate(const SampledField& f, const Point& xi0);
SampledField reflect(const SampledField& f);

// L2 inner product h^d sum f conj(g)
cd inner(const SampledField& f, const SampledField& g);

SampledField indicator(const GridSpec& grid, double a, double b);
SampledField gaussian(const GridSpec& grid, double width = 1.0, double center = 0.0,
                      double frequency = 0.0);
// value h^{-d} at the origin
SampledField discrete_delta(const GridSpec& grid);

}  // namespace tfa
