#pragma once

#include <span>
#include <string>

namespace tfa {

enum class WeightKind { constant, polynomial, exponential };

// omega(x) = <x>^s or e^{s|x|}; v is the submultiplicative companion with |s|.
class Weight {
 public:
  Weight() : Weight(WeightKind::constant, 0.0, 1) {}
  Weight(WeightKind kind, double s, int dim);

  static Weight constant(int dim = 1) { return {WeightKind::constant, 0.0, dim}; }
  static Weight polynomial(double s, int dim = 1) { return {WeightKind::polynomial, s, dim}; }
  static Weight exponential(double s, int dim = 1) { return {WeightKind::exponential, s, dim}; }

  // Parses "const", "poly:s" or "exp:s".
  static Weight parse(const std::string& spec, int dim);

  double omega(std::span<const double> x) const;
  double v(std::span<const double> x) const;
  Weight companion() const;
  Weight with_dim(int dim) const { return {kind_, s_, dim}; }

  WeightKind kind() const { return kind_; }
  double exponent() const { return s_; }
  int dim() const { return dim_; }
  bool is_constant() const { return kind_ == WeightKind::constant || s_ == 0.0; }

  // sup over [0,1]^dim of max(v, 1)
  double c_v() const { return c_v_; }
  // C in omega(x+y) <= C omega(x) v(y)
  double moderation_constant() const { return moderation_; }
  // largest ratio seen on the probe lattice at construction
  double measured_moderation() const { return measured_; }

  std::string spec() const;

 private:
  WeightKind kind_;
  double s_;
  int dim_;
  double c_v_ = 1.0;
  double moderation_ = 1.0;
  double measured_ = 1.0;
};

}  // namespace tfa
