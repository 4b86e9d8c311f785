#pragma once

#include <limits>

namespace tfa {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct QuasiNormParams {
  double p = 2.0;
  double q = 2.0;

  double order() const;
  void validate() const;
};

void validate_exponent(double p, const char* name);

// Accumulates a discrete (weight * sum |x|^p)^{1/p}, or max |x| when p is infinite.
class PowerSum {
 public:
  explicit PowerSum(double p) : p_(p) {}
  void add(double magnitude);
  double result(double weight) const;
  bool empty() const { return empty_; }

 private:
  double p_;
  double acc_ = 0.0;
  bool empty_ = true;
};

}  // namespace tfa
