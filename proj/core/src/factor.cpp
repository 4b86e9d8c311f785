#include "tfa/factor.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "tfa/error.hpp"
#include "tfa/fourier.hpp"
#include "tfa/schatten.hpp"
#include "tfa/timefreq.hpp"
#include "tfa/twist.hpp"

namespace tfa {

namespace {

const double kRoot2Pi = std::sqrt(2.0 * std::numbers::pi);

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

}  // namespace

// ---------------------------------------------------------------- generic pieces

template <class E>
std::vector<double> AlgebraModuleContext<E>::ladder() const {
  std::vector<double> out;
  const double floor = resolution_floor();
  for (double eps = 1.0; eps >= floor; eps *= 0.5) out.push_back(eps);
  return out;
}

template <class E>
double AlgebraModuleContext<E>::unit_radius() const {
  double r = 1.0;
  for (double eps : ladder()) r = std::max(r, algebra_norm(approx_identity(eps)));
  return r;
}

template <class E>
UnitalElement<E> multiply(const AlgebraModuleContext<E>& ctx, const UnitalElement<E>& a, const UnitalElement<E>& b) {
  return {a.t * b.t, a.t * b.phi + b.t * a.phi + ctx.multiply(a.phi, b.phi)};
}

template <class E>
E act(const AlgebraModuleContext<E>& ctx, const UnitalElement<E>& u, const E& f) {
  return u.t * f + ctx.act(u.phi, f);
}

template <class E>
double unital_norm(const AlgebraModuleContext<E>& ctx, const UnitalElement<E>& u) {
  const double p = ctx.order();
  if (u.t == 0.0) return ctx.algebra_norm(u.phi);
  return std::pow(std::pow(std::abs(u.t), p) + std::pow(ctx.algebra_norm(u.phi), p), 1.0 / p);
}

double r0(double r, double p) {
  if (!(r >= 1.0)) throw Error(ErrorCode::invalid_argument, "r must be at least 1");
  if (!(p > 0.0 && p <= 1.0)) throw Error(ErrorCode::invalid_argument, "p must lie in (0, 1]");
  return r / std::pow(std::pow(2.0 * r + 1.0, p) - std::pow(2.0 * r, p), 1.0 / p);
}

template <class E>
UnitalElement<E> neumann_T(const AlgebraModuleContext<E>& ctx, const E& phi, double r, double tol, int* terms) {
  if (!(tol > 0.0)) throw Error(ErrorCode::invalid_argument, "tol must be positive");
  if (!(r >= 1.0)) throw Error(ErrorCode::invalid_argument, "r must be at least 1");
  const double norm = ctx.algebra_norm(phi);
  if (norm > r * (1.0 + 1e-12))
    throw Error(ErrorCode::norm_exceeds_radius, "||phi||_B = " + fmt(norm) + " exceeds r = " + fmt(r));
  const double p = ctx.order();
  // tail sum_{k>K} 2^{-kp} = 2^{-(K+1)p} / (1 - 2^{-p}) < tol^p
  int K = 0;
  while (std::pow(2.0, -(K + 1) * p) / (1.0 - std::pow(2.0, -p)) >= std::pow(tol, p)) ++K;
  E sum = ctx.zero();
  E power = phi;
  double coeff = -1.0 / (2.0 * r);
  for (int k = 1; k <= K; ++k) {
    sum = sum + cd(coeff) * power;
    if (k < K) power = ctx.multiply(power, phi);
    coeff *= -1.0 / (2.0 * r);
  }
  if (terms) *terms = K;
  const double factor = (2.0 * r + 1.0) / (2.0 * r);
  return {factor, cd(factor) * sum};
}

template <class E>
UnitalElement<E> invert_unital(const AlgebraModuleContext<E>& ctx, const UnitalElement<E>& u) {
  return ctx.invert(u);
}

template <class E>
UnitChoice<E> select_unit(const AlgebraModuleContext<E>& ctx, const std::vector<E>& targets, const E& f, double eps,
                          double r) {
  if (!(eps > 0.0)) throw Error(ErrorCode::invalid_argument, "eps must be positive");
  // Residuals this small are below the roundoff of the products themselves and cannot be certified.
  double scale = ctx.module_norm(f);
  for (const E& t : targets) scale = std::max(scale, ctx.algebra_norm(t));
  const double noise = static_cast<double>(f.size()) * std::numeric_limits<double>::epsilon() * scale;
  if (eps <= noise)
    throw Error(ErrorCode::resolution_limited, "eps = " + fmt(eps) + " is below the roundoff floor " + fmt(noise));
  double best = std::numeric_limits<double>::infinity();
  for (double w : ctx.ladder()) {
    E phi = ctx.approx_identity(w);
    if (ctx.algebra_norm(phi) > r) continue;
    double worst = ctx.module_norm(ctx.act(phi, f) - f);
    for (const E& t : targets) worst = std::max(worst, ctx.algebra_norm(ctx.multiply(phi, t) - t));
    if (worst < eps) return {std::move(phi), w, worst};
    best = std::min(best, worst);
  }
  throw Error(ErrorCode::resolution_limited,
              "no ladder element reaches eps = " + fmt(eps) + "; best achieved " + fmt(best));
}

template <class E>
bool FactorizationResult<E>::rho_ok() const {
  for (std::size_t n = 0; n < rho.size(); ++n)
    if (rho[n] > std::ldexp(eps, -static_cast<int>(n + 1))) return false;
  return true;
}

template <class E>
FactorizationResult<E> hewitt_factorize(const AlgebraModuleContext<E>& ctx, const E& f, const FactorOptions& opt) {
  if (!(opt.eps > 0.0)) throw Error(ErrorCode::invalid_argument, "eps must be positive");
  if (opt.max_iter < 1) throw Error(ErrorCode::invalid_argument, "max_iter must be positive");
  if (!(opt.tol > 0.0)) throw Error(ErrorCode::invalid_argument, "tol must be positive");

  FactorizationResult<E> res;
  const double measured = ctx.unit_radius();
  if (opt.r > 0.0 && opt.r < measured)
    throw Error(ErrorCode::invalid_argument, "r = " + fmt(opt.r) + " is below the unit radius " + fmt(measured));
  const double r = opt.r > 0.0 ? opt.r : measured;
  const double p = ctx.order();
  res.eps = opt.eps;
  res.r = r;
  res.p = p;
  res.r0 = r0(r, p);
  res.rescale = ctx.rescale();
  res.f_norm = ctx.module_norm(f);
  res.f_minus_g_bound = opt.eps / std::pow(1.0 - std::pow(2.0, -p), 1.0 / p);

  const std::vector<double> ladder = ctx.ladder();
  if (res.f_norm == 0.0) {
    res.trivial = true;
    res.converged = true;
    res.psi = ctx.approx_identity(ladder.front());
    res.g = ctx.zero();
    res.psi_norm = ctx.algebra_norm(res.psi);
    return res;
  }

  // The first unit must meet eps on f; this also rejects unattainable eps up front.
  select_unit(ctx, {}, f, opt.eps, r);

  std::vector<E> units;
  for (double w : ladder) units.push_back(ctx.approx_identity(w));

  E sum = ctx.zero();  // sum_k c_k phi_k
  E g_prev = f;
  double s_prev = 1.0;
  int misses = 0;
  for (int n = 1; n <= opt.max_iter; ++n) {
    const double c_n = s_prev / (2.0 * r + 1.0);
    const double s_n = s_prev * (2.0 * r) / (2.0 * r + 1.0);
    const double target = std::ldexp(opt.eps, -n);
    // Candidates must act as a unit on g_{n-1} to within 2^-n eps; the finest rung is always tried.
    std::size_t pick = units.size();
    double pick_rho = std::numeric_limits<double>::infinity();
    E pick_g;
    for (std::size_t j = 0; j < units.size(); ++j) {
      const bool last = j + 1 == units.size();
      if (!last && ctx.module_norm(ctx.act(units[j], g_prev) - g_prev) > target) continue;
      const UnitalElement<E> inv = ctx.invert({s_n, sum + cd(c_n) * units[j]});
      E g = act(ctx, inv, f);
      const double rho = ctx.module_norm(g - g_prev);
      if (rho < pick_rho) {
        pick = j;
        pick_rho = rho;
        pick_g = std::move(g);
      }
      if (rho <= 0.5 * target) break;
    }
    if (pick_rho > target) {
      if (++misses == 2)
        throw Error(ErrorCode::refinement_stall, "rho_" + std::to_string(n) + " = " + fmt(pick_rho) +
                                                     " misses 2^-n eps twice in a row");
    } else {
      misses = 0;
    }
    sum = sum + cd(c_n) * units[pick];
    res.phis.push_back(units[pick]);
    res.widths.push_back(ladder[pick]);
    res.rho.push_back(pick_rho);
    g_prev = std::move(pick_g);
    s_prev = s_n;
    // closing with psi = sum + s_n phi_n leaves f - psi g = s_n (g - phi_n g)
    const double tail = s_n * ctx.module_norm(g_prev - ctx.act(units[pick], g_prev));
    if (tail <= opt.tol * res.f_norm) {
      res.converged = true;
      break;
    }
  }
  res.psi = sum + cd(s_prev) * res.phis.back();
  res.g = g_prev;
  res.residual = ctx.module_norm(f - ctx.act(res.psi, res.g)) / res.f_norm;
  res.f_minus_g = ctx.module_norm(f - res.g);
  res.psi_norm = ctx.algebra_norm(res.psi);
  return res;
}

// ---------------------------------------------------------------- convolution

std::string ModuleNormSpec::describe() const {
  const char* k = kind == Kind::lebesgue ? "L" : (kind == Kind::amalgam ? "WL" : "M");
  std::string out = std::string(k) + "^{";
  char buf[64];
  if (kind == Kind::lebesgue) std::snprintf(buf, sizeof buf, "%.17g", p);
  else std::snprintf(buf, sizeof buf, "%.17g,%.17g", p, q);
  return out + buf + "}_(" + weight.spec() + ")";
}

ConvCtx::ConvCtx(ConvConfig cfg) : cfg_(std::move(cfg)) {
  if (!(cfg_.s > 0.0 && cfg_.s <= 1.0)) throw Error(ErrorCode::invalid_argument, "algebra exponent must lie in (0, 1]");
  cfg_.v = cfg_.v.with_dim(cfg_.grid.d);
  const bool lebesgue_algebra = cfg_.s == 1.0;
  rescale_ = lebesgue_algebra ? 1.0 : std::pow(2.0, cfg_.grid.d) * cfg_.v.c_v();
  switch (cfg_.module.kind) {
    case ModuleNormSpec::Kind::modulation:
      if (cfg_.grid.d != 1) throw Error(ErrorCode::invalid_argument, "modulation modules need d = 1");
      cfg_.module.weight = cfg_.module.weight.with_dim(2);
      window_ = gaussian_window(cfg_.grid);
      break;
    default:
      cfg_.module.weight = cfg_.module.weight.with_dim(cfg_.grid.d);
  }
}

SampledField ConvCtx::multiply(const SampledField& a, const SampledField& b) const { return convolve(a, b); }
SampledField ConvCtx::act(const SampledField& a, const SampledField& f) const { return convolve(a, f); }

double ConvCtx::algebra_norm(const SampledField& a) const {
  if (cfg_.s == 1.0) return lp_norm(a, 1.0, cfg_.v);
  return rescale_ * amalgam_norm(a, AmalgamSpace::make(1.0, cfg_.s, cfg_.v));
}

double ConvCtx::module_norm(const SampledField& f) const {
  const ModuleNormSpec& m = cfg_.module;
  switch (m.kind) {
    case ModuleNormSpec::Kind::lebesgue: return lp_norm(f, m.p, m.weight);
    case ModuleNormSpec::Kind::amalgam: return amalgam_norm(f, AmalgamSpace::make(m.p, m.q, m.weight));
    case ModuleNormSpec::Kind::modulation:
      return modulation_norm(f, window_, ModulationParams{m.p, m.q, m.weight, ModulationKind::M});
  }
  return 0.0;
}

UnitalElement<SampledField> ConvCtx::invert(const UnitalElement<SampledField>& u) const {
  if (u.t == 0.0) throw Error(ErrorCode::near_singular, "scalar part is zero");
  const double root = std::pow(kRoot2Pi, cfg_.grid.d);
  const SampledField hat = fourier(u.phi);
  std::vector<cd> mult(hat.size());
  // scale of the element, not of the multiplier: -1 + (near unit) must count as singular
  double scale = 0.0;
  for (std::size_t k = 0; k < hat.size(); ++k) {
    mult[k] = u.t + root * hat[k];
    scale = std::max(scale, std::abs(root * hat[k]));
  }
  scale += std::abs(u.t);
  for (std::size_t k = 0; k < mult.size(); ++k) {
    if (std::abs(mult[k]) < 1e-12 * scale)
      throw Error(ErrorCode::near_singular, "Fourier multiplier " + fmt(std::abs(mult[k])) + " at index " +
                                                std::to_string(k) + " (scale " + fmt(scale) + ")");
    mult[k] = (1.0 / mult[k] - 1.0 / u.t) / root;
  }
  return {1.0 / u.t, inverse_fourier(SampledField(cfg_.grid, std::move(mult), Domain::frequency))};
}

SampledField ConvCtx::approx_identity(double eps) const {
  if (!(eps >= resolution_floor()))
    throw Error(ErrorCode::resolution_limited, "eps = " + fmt(eps) + " is below the floor " + fmt(resolution_floor()));
  return gaussian_mollifier(cfg_.grid, eps);
}

// ---------------------------------------------------------------- twisted convolution

TwistCtx::TwistCtx(TwistConfig cfg) : cfg_(std::move(cfg)) {
  if (cfg_.grid.d != 1) throw Error(ErrorCode::invalid_argument, "the twisted context needs d = 1");
  if (!(cfg_.s > 0.0 && cfg_.s <= 1.0)) throw Error(ErrorCode::invalid_argument, "algebra exponent must lie in (0, 1]");
  if (!(cfg_.schatten_p > 0.0)) throw Error(ErrorCode::invalid_argument, "Schatten exponent must be positive");
  cfg_.v = cfg_.v.with_dim(2);
  carrier_ = PhaseGrid::symbol(cfg_.grid);
  rescale_ = 4.0 * std::sqrt(std::numbers::pi / 2.0) * cfg_.v.c_v();
  parity_ = parity_matrix(cfg_.grid.n());
}

Eigen::MatrixXcd TwistCtx::V(const PhaseField& a) const {
  return kRoot2Pi * op_matrix(a, Quantization::weyl).m * parity_;
}

PhaseField TwistCtx::symbol_of_V(const Eigen::MatrixXcd& X) const {
  return symbol_of(OperatorMatrix{cfg_.grid, (X * parity_) / kRoot2Pi}, Quantization::weyl);
}

PhaseField TwistCtx::multiply(const PhaseField& a, const PhaseField& b) const { return symbol_of_V(V(a) * V(b)); }

PhaseField TwistCtx::act(const PhaseField& a, const PhaseField& f) const {
  return symbol_of(OperatorMatrix{cfg_.grid, V(a) * op_matrix(f, Quantization::weyl).m}, Quantization::weyl);
}

double TwistCtx::algebra_norm(const PhaseField& a) const {
  return rescale_ * amalgam_norm(a, AmalgamSpace::make(1.0, cfg_.s, cfg_.v));
}

double TwistCtx::module_norm(const PhaseField& f) const {
  const OperatorMatrix M = op_matrix(f, Quantization::weyl);
  if (cfg_.schatten_p == 2.0) return M.m.norm();
  return schatten_norm(singular_values(M), SchattenIndex::finite(cfg_.schatten_p));
}

UnitalElement<PhaseField> TwistCtx::invert(const UnitalElement<PhaseField>& u) const {
  if (u.t == 0.0) throw Error(ErrorCode::near_singular, "scalar part is zero");
  const int n = cfg_.grid.n();
  const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(n, n);
  const Eigen::MatrixXcd Vphi = V(u.phi);
  const Eigen::MatrixXcd A = u.t * I + Vphi;
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(A);
  // 1/||A^-1||_1 against |t| + ||V(phi)||_1
  const double scale = std::abs(u.t) + Vphi.cwiseAbs().colwise().sum().maxCoeff();
  const double rcond = lu.rcond() * A.cwiseAbs().colwise().sum().maxCoeff() / scale;
  if (!(rcond >= 1e-12)) throw Error(ErrorCode::near_singular, "reciprocal condition number " + fmt(rcond));
  const Eigen::MatrixXcd X = lu.inverse();
  return {1.0 / u.t, symbol_of_V(X - I / u.t)};
}

PhaseField TwistCtx::approx_identity(double eps) const {
  if (!(eps >= resolution_floor()))
    throw Error(ErrorCode::resolution_limited, "eps = " + fmt(eps) + " is below the floor " + fmt(resolution_floor()));
  // The discrete parity fixes both x = 0 and x = -L/2, so the unit carries a second copy
  // centred at z = -L/2 (z taken mod L). Without it V(unit) misses e_0 e_0^T.
  const double L = cfg_.grid.L;
  const auto bump = [&](double dz, double xi) { return std::exp(-0.5 * (dz * dz + xi * xi) / (eps * eps)); };
  const PhaseField origin = sample(carrier_, [&](double z, double xi) { return cd(bump(std::remainder(z, L), xi)); });
  const PhaseField image =
      sample(carrier_, [&](double z, double xi) { return cd(bump(std::remainder(z + 0.5 * L, L), xi)); });
  const double mass = std::sqrt(std::numbers::pi / 2.0);
  return cd(mass / integrate(origin).real()) * origin + cd(mass / integrate(image).real()) * image;
}

double TwistCtx::resolution_floor() const { return std::min(carrier_.x.step, carrier_.xi.step) / 8.0; }

WeylFactorization weyl_factorize(const TwistCtx& ctx, const PhaseField& f, const FactorOptions& opt) {
  WeylFactorization out;
  out.twisted = hewitt_factorize<PhaseField>(ctx, f, opt);
  const GridSpec& grid = ctx.config().grid;
  const PhaseField& G = out.twisted.g;
  const Eigen::MatrixXcd P = parity_matrix(grid.n());
  out.g_weyl = symbol_of(OperatorMatrix{grid, kRoot2Pi * P * op_matrix(G, Quantization::weyl).m}, Quantization::weyl);
  if (out.twisted.trivial) return out;
  const Eigen::MatrixXcd gap = op_matrix(f, Quantization::weyl).m -
                               op_matrix(out.twisted.psi, Quantization::weyl).m * op_matrix(out.g_weyl, Quantization::weyl).m;
  const double fnorm = out.twisted.f_norm;
  const auto snorm = [&](const Eigen::MatrixXcd& M) {
    const double p = ctx.config().schatten_p;
    if (p == 2.0) return M.norm();
    return schatten_norm(singular_values(OperatorMatrix{grid, M}), SchattenIndex::finite(p));
  };
  out.residual = snorm(gap) / fnorm;
  const PhaseField dense = cd(kRoot2Pi) * symplectic_ft(G);
  out.duality_residual = lp_norm(out.g_weyl - dense, 2.0) / lp_norm(out.g_weyl, 2.0);
  out.reverse_residual = ctx.module_norm(f - ctx.act(G, out.twisted.psi)) / fnorm;
  return out;
}

// ---------------------------------------------------------------- instantiations

#define TFA_INSTANTIATE(E)                                                                                      \
  template class AlgebraModuleContext<E>;                                                                       \
  template UnitalElement<E> multiply(const AlgebraModuleContext<E>&, const UnitalElement<E>&,                 \
                                     const UnitalElement<E>&);                                                  \
  template E act(const AlgebraModuleContext<E>&, const UnitalElement<E>&, const E&);                          \
  template double unital_norm(const AlgebraModuleContext<E>&, const UnitalElement<E>&);                       \
  template UnitalElement<E> neumann_T(const AlgebraModuleContext<E>&, const E&, double, double, int*);        \
  template UnitalElement<E> invert_unital(const AlgebraModuleContext<E>&, const UnitalElement<E>&);           \
  template UnitChoice<E> select_unit(const AlgebraModuleContext<E>&, const std::vector<E>&, const E&, double, \
                                     double);                                                                   \
  template struct FactorizationResult<E>;                                                                       \
  template FactorizationResult<E> hewitt_factorize(const AlgebraModuleContext<E>&, const E&, const FactorOptions&);

TFA_INSTANTIATE(SampledField)
TFA_INSTANTIATE(PhaseField)

#undef TFA_INSTANTIATE

}  // namespace tfa
