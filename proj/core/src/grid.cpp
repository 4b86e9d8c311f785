#include "tfa/grid.hpp"

#include <cmath>
#include <string>

#include "tfa/error.hpp"
#include "tfa/norms.hpp"

namespace tfa {

std::size_t GridSpec::size() const {
  std::size_t axis = static_cast<std::size_t>(n());
  return d == 1 ? axis : axis * axis;
}

double GridSpec::cell_volume() const { return std::pow(h(), d); }

GridSpec make_grid(int d, int m, int L) {
  if (d != 1 && d != 2) throw Error(ErrorCode::invalid_grid, "d must be 1 or 2, got " + std::to_string(d));
  if (m < 2) throw Error(ErrorCode::invalid_grid, "m must be at least 2, got " + std::to_string(m));
  if (L < 2) throw Error(ErrorCode::invalid_grid, "L must be at least 2, got " + std::to_string(L));
  if (L % 2 != 0) throw Error(ErrorCode::odd_side_length, "L must be even, got " + std::to_string(L));
  return GridSpec{d, m, L};
}

double QuasiNormParams::order() const { return std::min({p, q, 1.0}); }

void validate_exponent(double p, const char* name) {
  if (!(p > 0.0)) throw Error(ErrorCode::invalid_argument, std::string(name) + " must be positive");
}

void QuasiNormParams::validate() const {
  validate_exponent(p, "p");
  validate_exponent(q, "q");
}

void PowerSum::add(double magnitude) {
  empty_ = false;
  if (std::isinf(p_)) {
    acc_ = std::max(acc_, magnitude);
  } else if (p_ == 1.0) {
    acc_ += magnitude;
  } else if (p_ == 2.0) {
    acc_ += magnitude * magnitude;
  } else if (magnitude > 0.0) {
    acc_ += std::pow(magnitude, p_);
  }
}

double PowerSum::result(double weight) const {
  if (std::isinf(p_)) return acc_;
  if (p_ == 1.0) return weight * acc_;
  if (p_ == 2.0) return std::sqrt(weight * acc_);
  return std::pow(weight * acc_, 1.0 / p_);
}

}  // namespace tfa
