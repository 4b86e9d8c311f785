#pragma once

#include <array>
#include <cstddef>

namespace tfa {

// Uniform periodic grid over [-L/2, L/2)^d with m samples per unit length.
struct GridSpec {
  int d = 1;
  int m = 2;
  int L = 2;

  double h() const { return 1.0 / m; }
  int n() const { return m * L; }  // samples per axis
  std::size_t size() const;
  double coord(int j) const { return -0.5 * L + j * h(); }
  double cell_volume() const;

  bool operator==(const GridSpec&) const = default;
};

GridSpec make_grid(int d, int m, int L);

using Point = std::array<double, 2>;

}  // namespace tfa
