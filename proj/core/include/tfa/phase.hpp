#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "tfa/field.hpp"
#include "tfa/grid.hpp"

namespace tfa {

struct Axis {
  int n = 0;
  double start = 0.0;
  double step = 1.0;

  double coord(int i) const { return start + i * step; }
  double period() const { return n * step; }
  // origin sits on sample n/2
  bool centered() const;
  bool operator==(const Axis&) const = default;
};

enum class PhaseLayout {
  stft,    // x on the h-grid, xi on the FFT grid 2 pi k / L
  symbol,  // z on the h/2 half-grid, xi with spacing pi/L over [-pi/h, pi/h)
  square,  // both axes centered with a common spacing
};

struct PhaseGrid {
  PhaseLayout layout = PhaseLayout::square;
  Axis x;
  Axis xi;
  std::optional<GridSpec> base;  // spatial grid behind stft and symbol layouts

  static PhaseGrid stft(const GridSpec& g);
  static PhaseGrid symbol(const GridSpec& g);
  static PhaseGrid square(int n, double step);

  std::size_t size() const { return static_cast<std::size_t>(x.n) * xi.n; }
  double cell_area() const { return x.step * xi.step; }
  bool operator==(const PhaseGrid& o) const { return layout == o.layout && x == o.x && xi == o.xi && base == o.base; }
};

std::string to_string(PhaseLayout layout);
PhaseLayout parse_layout(const std::string& s);

class PhaseField {
 public:
  PhaseField() = default;
  PhaseField(PhaseGrid grid, std::vector<cd> values);

  static PhaseField zeros(const PhaseGrid& grid);

  const PhaseGrid& grid() const { return grid_; }
  const std::vector<cd>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  cd operator[](std::size_t i) const { return values_[i]; }
  cd at(int ix, int ik) const { return values_[index(ix, ik)]; }
  std::size_t index(int ix, int ik) const { return static_cast<std::size_t>(ix) * grid_.xi.n + ik; }
  bool is_zero() const;

 private:
  PhaseGrid grid_{};
  std::vector<cd> values_;
};

PhaseField sample(const PhaseGrid& grid, const std::function<cd(double, double)>& fn);

void require_same_grid(const PhaseField& a, const PhaseField& b);
PhaseField operator+(const PhaseField& a, const PhaseField& b);
PhaseField operator-(const PhaseField& a, const PhaseField& b);
PhaseField operator*(cd s, const PhaseField& a);
PhaseField abs(const PhaseField& a);

// (cell * sum |a|^p)^{1/p}
double lp_norm(const PhaseField& a, double p);
cd integrate(const PhaseField& a);

// a(-X), index reflection about the centered origin
PhaseField reflect(const PhaseField& a);
// a(X - X0) for X0 on the lattice
PhaseField translate(const PhaseField& a, double x0, double xi0);

// value 1/cell at the origin
PhaseField discrete_delta(const PhaseGrid& grid);

}  // namespace tfa
