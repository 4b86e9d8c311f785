#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tfa/amalgam.hpp"
#include "tfa/field.hpp"
#include "tfa/phase.hpp"
#include "tfa/weyl.hpp"

namespace tfa {

// t rho + phi in the unitalization of the algebra
template <class E>
struct UnitalElement {
  cd t{};
  E phi;
};

// Algebra B acting on a module M, both realized on the element type E.
// Norms are rescaled so that ||a b|| <= ||a|| ||b|| and ||a . f|| <= ||a|| ||f|| hold with
// constant 1; rescale() reports the factor applied to the raw algebra norm.
template <class E>
class AlgebraModuleContext {
 public:
  virtual ~AlgebraModuleContext() = default;

  virtual std::string name() const = 0;
  virtual E multiply(const E& a, const E& b) const = 0;
  virtual E act(const E& a, const E& f) const = 0;
  virtual double algebra_norm(const E& a) const = 0;
  virtual double module_norm(const E& f) const = 0;
  // quasi-norm order of the algebra, in (0, 1]
  virtual double order() const = 0;
  virtual double rescale() const = 0;
  virtual UnitalElement<E> invert(const UnitalElement<E>& u) const = 0;
  virtual E approx_identity(double eps) const = 0;
  virtual double resolution_floor() const = 0;
  virtual E zero() const = 0;

  // 1, 1/2, 1/4, ... down to the resolution floor
  std::vector<double> ladder() const;
  // max over the ladder of ||phi_eps||_B, floored at 1
  double unit_radius() const;
};

template <class E>
UnitalElement<E> multiply(const AlgebraModuleContext<E>& ctx, const UnitalElement<E>& a, const UnitalElement<E>& b);
template <class E>
E act(const AlgebraModuleContext<E>& ctx, const UnitalElement<E>& u, const E& f);
template <class E>
double unital_norm(const AlgebraModuleContext<E>& ctx, const UnitalElement<E>& u);

// Convolution algebra WL^{1,s}_(v) (or L^1_v when s = 1) acting on a module of functions.
struct ModuleNormSpec {
  enum class Kind { lebesgue, amalgam, modulation };
  Kind kind = Kind::lebesgue;
  double p = 2.0;
  double q = 2.0;
  Weight weight{};  // omega on R^d for lebesgue/amalgam, on R^{2d} for modulation

  std::string describe() const;
};

struct ConvConfig {
  GridSpec grid;
  double s = 0.5;       // inner exponent of the algebra WL^{1,s}
  Weight v{};           // algebra weight
  ModuleNormSpec module{};
};

class ConvCtx final : public AlgebraModuleContext<SampledField> {
 public:
  explicit ConvCtx(ConvConfig cfg);

  std::string name() const override { return "conv"; }
  SampledField multiply(const SampledField& a, const SampledField& b) const override;
  SampledField act(const SampledField& a, const SampledField& f) const override;
  double algebra_norm(const SampledField& a) const override;
  double module_norm(const SampledField& f) const override;
  double order() const override { return std::min(1.0, cfg_.s); }
  double rescale() const override { return rescale_; }
  UnitalElement<SampledField> invert(const UnitalElement<SampledField>& u) const override;
  SampledField approx_identity(double eps) const override;
  double resolution_floor() const override { return cfg_.grid.h() / 8.0; }
  SampledField zero() const override { return SampledField::zeros(cfg_.grid); }

  const ConvConfig& config() const { return cfg_; }

 private:
  ConvConfig cfg_;
  double rescale_ = 1.0;
  SampledField window_;
};

// Twisted convolution on Weyl symbols. V(a) = (2 pi)^{1/2} Op^w(a) P is multiplicative,
// so products and actions are evaluated as operator products and mapped back through
// symbol_of. The module is s_p^w.
struct TwistConfig {
  GridSpec grid;         // spatial grid behind the symbol carrier
  double s = 0.5;        // algebra WL^{1,s} on phase space
  Weight v = Weight::constant(2);
  double schatten_p = 2.0;
};

class TwistCtx final : public AlgebraModuleContext<PhaseField> {
 public:
  explicit TwistCtx(TwistConfig cfg);

  std::string name() const override { return "twist"; }
  PhaseField multiply(const PhaseField& a, const PhaseField& b) const override;
  PhaseField act(const PhaseField& a, const PhaseField& f) const override;
  double algebra_norm(const PhaseField& a) const override;
  double module_norm(const PhaseField& f) const override;
  double order() const override { return std::min(1.0, cfg_.s); }
  double rescale() const override { return rescale_; }
  UnitalElement<PhaseField> invert(const UnitalElement<PhaseField>& u) const override;
  PhaseField approx_identity(double eps) const override;
  double resolution_floor() const override;
  PhaseField zero() const override { return PhaseField::zeros(carrier_); }

  const TwistConfig& config() const { return cfg_; }
  const PhaseGrid& carrier() const { return carrier_; }
  Eigen::MatrixXcd V(const PhaseField& a) const;
  PhaseField symbol_of_V(const Eigen::MatrixXcd& X) const;

 private:
  TwistConfig cfg_;
  PhaseGrid carrier_;
  double rescale_ = 1.0;
  Eigen::MatrixXcd parity_;
};

double r0(double r, double p);

// ((2r+1)/(2r)) (rho + sum_{k>=1} (-1)^k (2r)^{-k} phi^k), truncated by the p-power tail bound.
template <class E>
UnitalElement<E> neumann_T(const AlgebraModuleContext<E>& ctx, const E& phi, double r, double tol, int* terms = nullptr);

template <class E>
UnitalElement<E> invert_unital(const AlgebraModuleContext<E>& ctx, const UnitalElement<E>& u);

template <class E>
struct UnitChoice {
  E phi;
  double eps = 0.0;        // ladder width
  double achieved = 0.0;   // max of the residuals that were tested
};

// First ladder element phi (coarse to fine) with ||phi t - t||_B < eps for every target,
// ||phi f - f||_M < eps and ||phi||_B <= r.
template <class E>
UnitChoice<E> select_unit(const AlgebraModuleContext<E>& ctx, const std::vector<E>& targets, const E& f, double eps,
                          double r);

struct FactorOptions {
  double eps = 0.1;      // absolute, in the module norm
  double r = 0.0;        // 0: use the measured unit radius
  int max_iter = 200;
  double tol = 1e-10;    // stop once ||f - psi g|| <= tol ||f||
};

template <class E>
struct FactorizationResult {
  E psi;
  E g;
  std::vector<E> phis;
  std::vector<double> widths;     // ladder width of each phi_k
  std::vector<double> rho;        // ||g_n - g_{n-1}||_M
  double eps = 0.0;
  double r = 0.0;
  double p = 0.0;
  double r0 = 0.0;
  double rescale = 1.0;
  double f_norm = 0.0;
  double residual = 0.0;          // ||f - psi g||_M / ||f||_M
  double f_minus_g = 0.0;         // ||f - g||_M
  double f_minus_g_bound = 0.0;   // eps / (1 - 2^{-p})^{1/p}
  double psi_norm = 0.0;
  bool trivial = false;
  bool converged = false;

  bool residual_ok(double tol) const { return trivial || residual <= tol; }
  bool g_bound_ok() const { return f_minus_g <= f_minus_g_bound; }
  bool psi_bound_ok() const { return psi_norm <= r0 * (1.0 + 1e-12); }
  bool rho_ok() const;
};

template <class E>
FactorizationResult<E> hewitt_factorize(const AlgebraModuleContext<E>& ctx, const E& f, const FactorOptions& opt);

// f = psi # g_w through the twisted factorization f = psi *_sigma G and
// g_w = symbol_of((2 pi)^{1/2} P Op^w(G)).
struct WeylFactorization {
  FactorizationResult<PhaseField> twisted;
  PhaseField g_weyl;
  double residual = 0.0;          // ||Op(f) - Op(psi) Op(g_w)||_{s_p} / ||f||
  double duality_residual = 0.0;  // ||g_w - (2 pi)^{1/2} F_sigma G||_2 / ||g_w||_2
  double reverse_residual = 0.0;  // ||f - G *_sigma psi|| / ||f||, recorded only
};

WeylFactorization weyl_factorize(const TwistCtx& ctx, const PhaseField& f, const FactorOptions& opt);

}  // namespace tfa
