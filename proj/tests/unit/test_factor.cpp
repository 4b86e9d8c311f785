#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "tfa/error.hpp"
#include "tfa/factor.hpp"
#include "tfa/random.hpp"
#include "tfa/timefreq.hpp"
#include "tfa/twist.hpp"

using namespace tfa;
using oracle::pi;

namespace {

ConvCtx conv_ctx(double s = 0.5, ModuleNormSpec module = {}) {
  ConvConfig cfg;
  cfg.grid = make_grid(1, 8, 8);
  cfg.s = s;
  cfg.module = module;
  return ConvCtx(cfg);
}

TwistCtx twist_ctx(int L = 4, int m = 2) {
  TwistConfig cfg;
  cfg.grid = make_grid(1, m, L);
  return TwistCtx(cfg);
}

template <class E>
E scaled_to(const AlgebraModuleContext<E>& ctx, const E& phi, double norm) {
  return cd(norm / ctx.algebra_norm(phi)) * phi;
}

template <class F>
ErrorCode code_of(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::invalid_argument;
}

}  // namespace

TEST(R0, Examples) {
  EXPECT_DOUBLE_EQ(r0(1, 1), 1.0);
  EXPECT_DOUBLE_EQ(r0(2, 1), 2.0);
  // 1/(sqrt3 - sqrt2)^2 = (sqrt3 + sqrt2)^2 = 5 + 2 sqrt6
  EXPECT_NEAR(r0(1, 0.5), 5 + 2 * std::sqrt(6.0), 1e-12);
  EXPECT_NEAR(r0(1, 0.5), 9.899, 1e-3);
  EXPECT_THROW(r0(0.5, 1), Error);
  EXPECT_THROW(r0(1, 1.5), Error);
  EXPECT_THROW(r0(1, 0), Error);
}

TEST(UnitalNorm, Definition) {
  const ConvCtx ctx = conv_ctx();
  Rng rng(1);
  const SampledField phi = random_smooth_field(ctx.config().grid, rng);
  EXPECT_EQ(unital_norm(ctx, {0.0, phi}), ctx.algebra_norm(phi));
  const double p = ctx.order();
  const double want = std::pow(std::pow(3.0, p) + std::pow(ctx.algebra_norm(phi), p), 1 / p);
  EXPECT_NEAR(unital_norm(ctx, {cd(0, 3), phi}), want, 1e-12 * want);
}

TEST(Contexts, Submultiplicative) {
  Rng rng(2);
  const ConvCtx lebesgue = conv_ctx();
  const ConvCtx amalgam = conv_ctx(0.5, {ModuleNormSpec::Kind::amalgam, 2.0, 1.0, Weight{}});
  const ConvCtx l1v = conv_ctx(1.0, {ModuleNormSpec::Kind::lebesgue, 1.0, 1.0, Weight{}});
  const ConvCtx modulation = conv_ctx(0.5, {ModuleNormSpec::Kind::modulation, 2.0, 1.0, Weight::constant(2)});
  for (const ConvCtx* ctx : {&lebesgue, &amalgam, &l1v, &modulation}) {
    for (int t = 0; t < 20; ++t) {
      const SampledField a = random_field(ctx->config().grid, rng, 1.0), b = random_field(ctx->config().grid, rng, 2.0);
      const SampledField f = random_field(ctx->config().grid, rng);
      EXPECT_LE(ctx->algebra_norm(ctx->multiply(a, b)), ctx->algebra_norm(a) * ctx->algebra_norm(b) * (1 + 1e-10));
      EXPECT_LE(ctx->module_norm(ctx->act(a, f)), ctx->algebra_norm(a) * ctx->module_norm(f) * (1 + 1e-10))
          << ctx->config().module.describe();
    }
  }
  const TwistCtx tw = twist_ctx();
  for (int t = 0; t < 20; ++t) {
    const PhaseField a = random_phase_field(tw.carrier(), rng), b = random_phase_field(tw.carrier(), rng);
    const PhaseField f = random_phase_field(tw.carrier(), rng);
    EXPECT_LE(tw.algebra_norm(tw.multiply(a, b)), tw.algebra_norm(a) * tw.algebra_norm(b) * (1 + 1e-10));
    EXPECT_LE(tw.module_norm(tw.act(a, f)), tw.algebra_norm(a) * tw.module_norm(f) * (1 + 1e-10));
  }
}

TEST(Twist, MultiplyIsTwistedConvolution) {
  // V turns *_sigma into a matrix product; the dense quadrature agrees up to its own error
  const TwistCtx tw = twist_ctx(16, 4);
  Rng rng(3);
  BumpOptions o;
  o.center = 0.5;
  o.width_min = 0.9;
  o.width_max = 1.1;
  const PhaseField a = random_smooth_symbol(tw.carrier(), rng, o), b = random_smooth_symbol(tw.carrier(), rng, o);
  EXPECT_LT(oracle::rel_l2_diff(tw.multiply(a, b), twisted_convolve(a, b)), 1e-8);
}

TEST(Neumann, ZeroPhi) {
  const ConvCtx ctx = conv_ctx();
  const UnitalElement<SampledField> T = neumann_T(ctx, ctx.zero(), 1.0, 1e-12);
  EXPECT_EQ(T.t, cd(1.5));
  EXPECT_TRUE(T.phi.is_zero());
}

TEST(Neumann, ProductResidual) {
  Rng rng(4);
  const ConvCtx conv = conv_ctx();
  const TwistCtx tw = twist_ctx();
  for (double r : {1.0, 2.0}) {
    for (int t = 0; t < 10; ++t) {
      const SampledField phi = scaled_to<SampledField>(conv, random_field(conv.config().grid, rng), rng.uniform(0.1, r));
      const auto T = neumann_T(conv, phi, r, 1e-12);
      const UnitalElement<SampledField> u{2 * r / (2 * r + 1), cd(1 / (2 * r + 1)) * phi};
      const auto prod = multiply(conv, T, u);
      EXPECT_LT(unital_norm(conv, {prod.t - 1.0, prod.phi}), 1e-10);

      // symbols differing by ker V are one algebra element; draw from the range
    const PhaseField raw = tw.symbol_of_V(tw.V(random_phase_field(tw.carrier(), rng)));
    const PhaseField psi = scaled_to<PhaseField>(tw, raw, rng.uniform(0.1, r));
      const auto Tw = neumann_T(tw, psi, r, 1e-12);
      const auto pw = multiply(tw, Tw, UnitalElement<PhaseField>{2 * r / (2 * r + 1), cd(1 / (2 * r + 1)) * psi});
      EXPECT_LT(unital_norm(tw, {pw.t - 1.0, pw.phi}), 1e-10);
    }
  }
}

TEST(Neumann, Brackets) {
  Rng rng(5);
  const ConvCtx l1 = conv_ctx(1.0);
  const ConvCtx wl = conv_ctx(0.5);
  for (const ConvCtx* ctx : {&l1, &wl}) {
    const double p = ctx->order();
    for (double r : {1.0, 3.0}) {
      const double lo = (2 + 1 / r) / std::pow(std::pow(2.0, p) + 1, 1 / p);
      const double hi = (2 + 1 / r) / std::pow(std::pow(2.0, p) - 1, 1 / p);
      for (int t = 0; t < 20; ++t) {
        const SampledField phi = scaled_to<SampledField>(*ctx, random_field(ctx->config().grid, rng), rng.uniform(0.0, r));
        const double n = unital_norm(*ctx, neumann_T(*ctx, phi, r, 1e-12));
        EXPECT_GE(n, lo * (1 - 1e-12));
        EXPECT_LE(n, hi * (1 + 1e-12));
      }
    }
  }
}

TEST(Neumann, ModuleBound) {
  Rng rng(6);
  const ConvCtx ctx = conv_ctx();
  const double r = 1.0, p = ctx.order();
  const double C = std::pow(1 - std::pow(2.0, -p), -2 / p) * (2 * r + 1) / (4 * r);
  for (int t = 0; t < 20; ++t) {
    const SampledField phi = scaled_to<SampledField>(ctx, random_smooth_field(ctx.config().grid, rng), rng.uniform(0.1, r));
    const SampledField f = random_field(ctx.config().grid, rng);
    const double lhs = ctx.module_norm(act(ctx, neumann_T(ctx, phi, r, 1e-12), f) - f);
    EXPECT_LE(lhs, C * ctx.module_norm(ctx.act(phi, f) - f) + 1e-10);
  }
}

TEST(Neumann, Errors) {
  const ConvCtx ctx = conv_ctx();
  const SampledField phi = scaled_to<SampledField>(ctx, gaussian(ctx.config().grid), 2.0);
  EXPECT_EQ(code_of([&] { neumann_T(ctx, phi, 1.0, 1e-12); }), ErrorCode::norm_exceeds_radius);
  EXPECT_EQ(code_of([&] { neumann_T(ctx, phi, 2.5, 0.0); }), ErrorCode::invalid_argument);
  int terms = 0;
  neumann_T(ctx, phi, 2.5, 1e-6, &terms);
  EXPECT_GT(terms, 0);
}

TEST(ApproxIdentity, ConvLadder) {
  const ConvCtx ctx = conv_ctx();
  const auto ladder = ctx.ladder();
  ASSERT_GE(ladder.size(), 2u);
  EXPECT_EQ(ladder.front(), 1.0);
  EXPECT_GE(ladder.back(), ctx.resolution_floor());
  const double r = ctx.unit_radius();
  for (std::size_t i = 0; i < ladder.size(); ++i) {
    if (i > 0) {
      EXPECT_EQ(ladder[i], ladder[i - 1] / 2);
    }
    const SampledField phi = ctx.approx_identity(ladder[i]);
    EXPECT_NEAR(integrate(phi).real(), 1.0, 1e-12);
    EXPECT_LE(ctx.algebra_norm(phi), r);
  }
  EXPECT_EQ(code_of([&] { ctx.approx_identity(ctx.resolution_floor() / 2); }), ErrorCode::resolution_limited);
}

TEST(ApproxIdentity, ConvResidualDecreases) {
  const ConvCtx ctx = conv_ctx(0.5, {ModuleNormSpec::Kind::amalgam, 2.0, 1.0, Weight{}});
  const SampledField f = gaussian(ctx.config().grid, 0.7);
  double prev = kInf;
  for (double e : ctx.ladder()) {
    const double res = ctx.module_norm(ctx.act(ctx.approx_identity(e), f) - f);
    EXPECT_LT(res, prev) << e;
    prev = res;
  }
}

TEST(ApproxIdentity, TwistLadder) {
  const TwistCtx ctx = twist_ctx(8);
  const double r = ctx.unit_radius();
  Rng rng(7);
  const PhaseField a = random_phase_field(ctx.carrier(), rng);
  double prev = kInf;
  for (double e : ctx.ladder()) {
    const PhaseField phi = ctx.approx_identity(e);
    // each of the two Gaussian copies carries (pi/2)^{1/2}
    EXPECT_NEAR(integrate(phi).real(), 2 * std::sqrt(pi / 2), 1e-12);
    EXPECT_LE(ctx.algebra_norm(phi), r);
    const double res = ctx.module_norm(ctx.act(phi, a) - a);
    EXPECT_LT(res, prev) << e;
    prev = res;
  }
  const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(ctx.config().grid.n(), ctx.config().grid.n());
  EXPECT_LT(oracle::op_norm(ctx.V(ctx.approx_identity(ctx.ladder().back())) - I), 1e-10);
}

TEST(SelectUnit, Examples) {
  const ConvCtx ctx = conv_ctx();
  const SampledField f = gaussian(ctx.config().grid);
  const double r = ctx.unit_radius();
  const UnitChoice<SampledField> u = select_unit<SampledField>(ctx, {}, f, 0.1, r);
  EXPECT_LT(u.achieved, 0.1);
  EXPECT_EQ(select_unit<SampledField>(ctx, {}, f, 10.0, r).eps, 1.0);
  EXPECT_EQ(code_of([&] { select_unit<SampledField>(ctx, {}, f, 1e-15, r); }), ErrorCode::resolution_limited);
  try {
    select_unit<SampledField>(ctx, {}, f, 1e-15, r);
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("roundoff floor"), std::string::npos);
  }
  // targets tighten the choice
  const std::vector<SampledField> targets{ctx.approx_identity(0.5)};
  const UnitChoice<SampledField> t = select_unit<SampledField>(ctx, targets, f, 0.1, r);
  EXPECT_LE(t.eps, u.eps);
  EXPECT_LT(ctx.algebra_norm(ctx.multiply(t.phi, targets[0]) - targets[0]), 0.1);
}

TEST(InvertUnital, Examples) {
  const ConvCtx ctx = conv_ctx();
  const auto one = invert_unital(ctx, {1.0, ctx.zero()});
  EXPECT_EQ(one.t, cd(1.0));
  EXPECT_LT(lp_norm(one.phi, kInf), 1e-14);
  const auto half = invert_unital(ctx, {2.0, ctx.zero()});
  EXPECT_EQ(half.t, cd(0.5));
  EXPECT_LT(lp_norm(half.phi, kInf), 1e-14);

  const TwistCtx tw = twist_ctx();
  const auto twone = invert_unital(tw, {2.0, tw.zero()});
  EXPECT_EQ(twone.t, cd(0.5));
  EXPECT_LT(lp_norm(twone.phi, kInf), 1e-12);
}

TEST(InvertUnital, NeumannCrossOracle) {
  Rng rng(8);
  const ConvCtx ctx = conv_ctx();
  const TwistCtx tw = twist_ctx();
  const double r = 1.0;
  for (int t = 0; t < 10; ++t) {
    const SampledField phi = scaled_to<SampledField>(ctx, random_field(ctx.config().grid, rng), rng.uniform(0.1, r));
    const auto inv = invert_unital(ctx, {2 * r / (2 * r + 1), cd(1 / (2 * r + 1)) * phi});
    const auto T = neumann_T(ctx, phi, r, 1e-12);
    EXPECT_LT(unital_norm(ctx, {inv.t - T.t, inv.phi - T.phi}), 1e-8);

    // symbols differing by ker V are one algebra element; draw from the range
    const PhaseField raw = tw.symbol_of_V(tw.V(random_phase_field(tw.carrier(), rng)));
    const PhaseField psi = scaled_to<PhaseField>(tw, raw, rng.uniform(0.1, r));
    const auto iw = invert_unital(tw, {2 * r / (2 * r + 1), cd(1 / (2 * r + 1)) * psi});
    const auto Tw = neumann_T(tw, psi, r, 1e-12);
    EXPECT_LT(unital_norm(tw, {iw.t - Tw.t, iw.phi - Tw.phi}), 1e-8);
  }
}

TEST(InvertUnital, ProbeContract) {
  Rng rng(9);
  const ConvCtx ctx = conv_ctx();
  const TwistCtx tw = twist_ctx();
  for (int t = 0; t < 10; ++t) {
    const UnitalElement<SampledField> u{rng.uniform(0.5, 2.0), random_smooth_field(ctx.config().grid, rng)};
    const auto inv = invert_unital(ctx, u);
    const SampledField x = random_field(ctx.config().grid, rng);
    EXPECT_LE(ctx.module_norm(act(ctx, u, act(ctx, inv, x)) - x), 1e-8 * ctx.module_norm(x));

    const UnitalElement<PhaseField> w{rng.uniform(0.5, 2.0), cd(0.01) * random_phase_field(tw.carrier(), rng)};
    const auto iw = invert_unital(tw, w);
    const PhaseField y = random_phase_field(tw.carrier(), rng);
    EXPECT_LE(tw.module_norm(act(tw, w, act(tw, iw, y)) - y), 1e-8 * tw.module_norm(y));
  }
}

TEST(InvertUnital, NearSingular) {
  const ConvCtx ctx = conv_ctx();
  EXPECT_EQ(code_of([&] { invert_unital(ctx, {0.0, gaussian(ctx.config().grid)}); }), ErrorCode::near_singular);
  // t + integral(phi) kills the zero-frequency multiplier
  const SampledField phi = gaussian(ctx.config().grid);
  EXPECT_EQ(code_of([&] { invert_unital(ctx, {-integrate(phi), phi}); }), ErrorCode::near_singular);
  const TwistCtx tw = twist_ctx();
  const PhaseField unit = tw.approx_identity(tw.ladder().back());
  EXPECT_EQ(code_of([&] { invert_unital(tw, {-1.0, unit}); }), ErrorCode::near_singular);
}

TEST(Hewitt, Trivial) {
  const ConvCtx ctx = conv_ctx();
  const auto res = hewitt_factorize<SampledField>(ctx, ctx.zero(), {});
  EXPECT_TRUE(res.trivial);
  EXPECT_TRUE(res.g.is_zero());
  EXPECT_TRUE(res.residual_ok(1e-12));
}

TEST(Hewitt, Convolution) {
  const ConvCtx ctx = conv_ctx();
  const SampledField f = gaussian(ctx.config().grid);
  FactorOptions opt;
  opt.eps = 0.1 * ctx.module_norm(f);
  const auto res = hewitt_factorize(ctx, f, opt);
  EXPECT_TRUE(res.converged);
  EXPECT_LT(res.residual, 1e-8);
  EXPECT_LE(res.f_minus_g, opt.eps / std::pow(1 - std::pow(2.0, -0.5), 2.0));
  EXPECT_LE(res.psi_norm, r0(res.r, 0.5));
  EXPECT_TRUE(res.rho_ok());
  EXPECT_EQ(res.p, 0.5);
  // independent residual: convolve by hand
  const auto psig = oracle::circular_convolution(res.psi, res.g);
  std::vector<cd> diff(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) diff[i] = f[i] - psig[i];
  EXPECT_LT(oracle::l2(diff, ctx.config().grid.h()) / lp_norm(f, 2.0), 1e-8);
}

TEST(Hewitt, ConvolutionErrors) {
  const ConvCtx ctx = conv_ctx();
  const SampledField f = gaussian(ctx.config().grid);
  FactorOptions opt;
  opt.eps = 1e-15;
  EXPECT_EQ(code_of([&] { hewitt_factorize(ctx, f, opt); }), ErrorCode::resolution_limited);
  opt.eps = 0.1;
  opt.r = 0.5;
  EXPECT_EQ(code_of([&] { hewitt_factorize(ctx, f, opt); }), ErrorCode::invalid_argument);
}

TEST(Hewitt, Twisted) {
  const TwistCtx ctx = twist_ctx();
  ASSERT_EQ(ctx.carrier().x.n, 16);
  Rng rng(10);
  const PhaseField f = random_phase_field(ctx.carrier(), rng);
  FactorOptions opt;
  opt.eps = 0.1 * ctx.module_norm(f);
  opt.tol = 1e-8;
  const auto res = hewitt_factorize(ctx, f, opt);
  EXPECT_LT(res.residual, 1e-6);
  EXPECT_LE(res.psi_norm, res.r0);
  EXPECT_TRUE(res.rho_ok());
  EXPECT_TRUE(res.g_bound_ok());
  // operator-side oracle: V(psi) Op(g) against Op(f)
  const Eigen::MatrixXcd lhs = ctx.V(res.psi) * op_matrix(res.g, Quantization::weyl).m;
  const Eigen::MatrixXcd want = op_matrix(f, Quantization::weyl).m;
  EXPECT_LT((lhs - want).norm() / want.norm(), 1e-6);
}

TEST(Hewitt, WeylFormulation) {
  const TwistCtx ctx = twist_ctx(8);
  Rng rng(11);
  const PhaseField f = random_phase_field(ctx.carrier(), rng);
  FactorOptions opt;
  opt.eps = 0.1 * ctx.module_norm(f);
  opt.tol = 1e-8;
  const WeylFactorization w = weyl_factorize(ctx, f, opt);
  EXPECT_LT(w.residual, 1e-6);
  RecordProperty("duality_residual", std::to_string(w.duality_residual));
  RecordProperty("reverse_residual", std::to_string(w.reverse_residual));
  EXPECT_TRUE(std::isfinite(w.duality_residual));
}
