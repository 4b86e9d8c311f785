// Acceptance run: one line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tfa/amalgam.hpp"
#include "tfa/factor.hpp"
#include "tfa/random.hpp"
#include "tfa/schatten.hpp"
#include "tfa/suites.hpp"
#include "tfa/twist.hpp"
#include "tfa/weyl.hpp"

using namespace tfa;

namespace {

// tolerances
constexpr double kCoincidence = 1e-12;       // 1
constexpr double kHewittResidual = 1e-8;     // 5
constexpr double kModulationResidual = 1e-3;  // 6
constexpr double kNeumannResidual = 1e-10;   // 7
constexpr double kNeumannSlack = 1e-10;      // 7
constexpr double kMoyalSigma1 = 1e-4;        // 8
constexpr double kMoyalTail = 1e-6;          // 8
constexpr double kRoundoff = 1e-12;          // 8, trend floor
constexpr double kCrossCheck = 1e-3;         // 10
constexpr double kTwistResidual = 1e-6;      // 11

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string sci(double x) { return fmt("%.3e", x); }

struct SuiteSummary {
  std::size_t rows = 0;
  std::size_t violations = 0;
  double worst_margin = std::numeric_limits<double>::infinity();
  double worst_lhs = 0.0;
};

SuiteSummary summarize(const std::string& name, int trials, std::uint64_t seed = 1) {
  SuiteConfig c;
  c.seed = seed;
  c.trials = trials;
  SuiteSummary s;
  for (const SuiteRow& r : run_suite(name, c)) {
    ++s.rows;
    if (!r.pass) ++s.violations;
    s.worst_margin = std::min(s.worst_margin, r.margin);
    s.worst_lhs = std::max(s.worst_lhs, r.lhs);
  }
  return s;
}

Outcome from_suite(const std::string& name, int trials, std::size_t expect_rows = 0) {
  const SuiteSummary s = summarize(name, trials);
  const bool rows_ok = expect_rows == 0 || s.rows == expect_rows;
  return {s.rows > 0 && rows_ok && s.violations == 0,
          std::to_string(s.rows) + " rows, " + std::to_string(s.violations) + " violations, worst margin " +
              sci(s.worst_margin)};
}

Outcome c1() {
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    Rng rng(trial_seed(101, t));
    const GridSpec grid = t % 3 == 2 ? make_grid(2, 4, 8) : make_grid(1, 8, 16);
    const SampledField f = t % 2 ? random_smooth_field(grid, rng) : random_field(grid, rng);
    for (double p : {0.5, 1.0, 2.0}) {
      const double lp = lp_norm(f, p);
      worst = std::max(worst, std::abs(amalgam_norm(f, AmalgamSpace::make(p, p)) - lp) / lp);
      if (grid.d == 1) worst = std::max(worst, std::abs(oracle::amalgam(f, p, p) - lp) / lp);
    }
  }
  return {worst < kCoincidence, "max relative gap " + sci(worst)};
}

ConvCtx conv(double s, ModuleNormSpec module = {}) {
  ConvConfig cfg;
  cfg.grid = make_grid(1, 8, 8);
  cfg.s = s;
  cfg.module = module;
  return ConvCtx(cfg);
}

Outcome c5() {
  const ConvCtx ctx = conv(0.5);
  const SampledField f = gaussian(ctx.config().grid);
  FactorOptions opt;
  opt.eps = 0.1 * ctx.module_norm(f);
  const auto res = hewitt_factorize(ctx, f, opt);
  const auto psig = oracle::circular_convolution(res.psi, res.g);
  std::vector<cd> diff(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) diff[i] = f[i] - psig[i];
  const double direct = oracle::l2(diff, ctx.config().grid.h()) / lp_norm(f, 2.0);
  const double gbound = opt.eps / std::pow(1 - std::pow(2.0, -0.5), 2.0);
  const double bound = r0(res.r, 0.5);
  const bool ok = res.residual < kHewittResidual && direct < kHewittResidual && res.f_minus_g <= gbound &&
                  res.psi_norm <= bound;
  return {ok, "residual " + sci(res.residual) + " (direct " + sci(direct) + "), ||f-g|| " + sci(res.f_minus_g) +
                  " <= " + sci(gbound) + ", ||psi|| " + sci(res.psi_norm) + " <= r0 " + sci(bound) + ", " +
                  std::to_string(res.phis.size()) + " steps"};
}

Outcome c6() {
  const ConvCtx ctx = conv(0.5, {ModuleNormSpec::Kind::modulation, 2.0, 1.0, Weight::constant(2)});
  Rng rng(606);
  BumpOptions o;
  o.center = 1.0;
  o.width_min = 0.6;
  o.width_max = 1.2;
  const SampledField f = random_smooth_field(ctx.config().grid, rng, o);
  // residual ladder ||f - phi_eps f||_M
  bool monotone = true;
  double prev = std::numeric_limits<double>::infinity();
  std::string ladder;
  for (double w : ctx.ladder()) {
    const double res = ctx.module_norm(ctx.act(ctx.approx_identity(w), f) - f);
    if (!(res <= prev)) monotone = false;
    prev = res;
    ladder += (ladder.empty() ? "" : " ") + fmt("%.1e", res);
  }
  FactorOptions opt;
  opt.eps = 0.1 * ctx.module_norm(f);
  const auto res = hewitt_factorize(ctx, f, opt);
  const bool ok = monotone && res.residual < kModulationResidual && res.psi_norm <= res.r0 && res.g_bound_ok();
  return {ok, "M^{2,1} residual " + sci(res.residual) + ", ||psi|| " + sci(res.psi_norm) + " <= " + sci(res.r0) +
                  ", ladder [" + ladder + "]" + (monotone ? "" : " NOT monotone")};
}

Outcome c7() {
  Rng rng(707);
  // product residual and the module bound on WL^{1,1/2}
  const ConvCtx wl = conv(0.5);
  double product = 0.0, slack = std::numeric_limits<double>::infinity();
  for (double r : {1.0, 2.0}) {
    const double p = wl.order();
    const double C = std::pow(1 - std::pow(2.0, -p), -2 / p) * (2 * r + 1) / (4 * r);
    for (int t = 0; t < 25; ++t) {
      SampledField phi = random_smooth_field(wl.config().grid, rng);
      phi = cd(rng.uniform(0.1, r) / wl.algebra_norm(phi)) * phi;
      const auto T = neumann_T(wl, phi, r, 1e-14);
      const UnitalElement<SampledField> u{2 * r / (2 * r + 1), cd(1 / (2 * r + 1)) * phi};
      const auto prod = multiply(wl, T, u);
      product = std::max(product, unital_norm(wl, {prod.t - 1.0, prod.phi}));
      const SampledField f = random_field(wl.config().grid, rng);
      const double lhs = wl.module_norm(act(wl, T, f) - f);
      slack = std::min(slack, C * wl.module_norm(wl.act(phi, f) - f) + kNeumannSlack - lhs);
    }
  }
  // brackets at r = 1, p = 1 on L^1
  const ConvCtx l1 = conv(1.0);
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (int t = 0; t < 50; ++t) {
    SampledField phi = random_field(l1.config().grid, rng);
    phi = cd(rng.uniform(0.0, 1.0) / l1.algebra_norm(phi)) * phi;
    const double n = unital_norm(l1, neumann_T(l1, phi, 1.0, 1e-14));
    lo = std::min(lo, n);
    hi = std::max(hi, n);
  }
  const bool ok = product < kNeumannResidual && slack >= 0.0 && lo >= 1.0 && hi <= 3.0;
  return {ok, "product residual " + sci(product) + ", bound slack " + sci(slack) + ", ||T|| in [" + fmt("%.4f", lo) +
                  ", " + fmt("%.4f", hi) + "]"};
}

Outcome c8() {
  // analytic W_{f,g} sampled on the symbol carrier, then quantized
  const std::pair<oracle::GaussianAtom, oracle::GaussianAtom> pairs[] = {
      {{1.0, 0.5, 1.0}, {cd(0.6, 0.3), -0.7, -0.5}},
      {{1.0, 0.5, 9.0}, {cd(0.6, 0.3), -0.7, 8.0}},
  };
  bool ok = true;
  std::string detail;
  for (const auto& [F, G] : pairs) {
    double prev = std::numeric_limits<double>::infinity();
    std::string line = "b=" + fmt("%g", F.b) + ":";
    for (int m : {4, 8, 16}) {
      const PhaseGrid carrier = PhaseGrid::symbol(make_grid(1, m, 12));
      const PhaseField a = sample(carrier, [&](double x, double xi) { return oracle::weyl_wigner(F, G, x, xi); });
      const std::vector<double> s = singular_values(op_matrix(a, Quantization::weyl));
      const double want = F.l2() * G.l2() / std::sqrt(2 * oracle::pi);
      const double e1 = std::abs(s[0] - want) / want, tail = s[1] / s[0];
      const double err = std::max(e1, tail);
      if (m == 4 && !(e1 < kMoyalSigma1 && tail < kMoyalTail)) ok = false;
      if (!(err <= prev || (err < kRoundoff && prev < kRoundoff))) ok = false;
      prev = err;
      line += " m=" + std::to_string(m) + " " + sci(e1) + "/" + sci(tail);
    }
    detail += (detail.empty() ? "" : "; ") + line;
  }
  return {ok, "sigma1 rel err / sigma2:sigma1 " + detail};
}

Outcome c9() {
  const SuiteSummary h = summarize("holder", 100);
  const PhaseGrid carrier = PhaseGrid::symbol(make_grid(1, 2, 8));
  const std::vector<SchattenIndex> order = {SchattenIndex::finite(0.5), SchattenIndex::finite(2.0 / 3.0),
                                            SchattenIndex::finite(1.0), SchattenIndex::finite(2.0),
                                            SchattenIndex::finite(4.0), SchattenIndex::infinity()};
  int breaks = 0;
  for (int t = 0; t < 20; ++t) {
    Rng rng(trial_seed(909, t));
    const std::vector<double> s = singular_values(op_matrix(random_smooth_symbol(carrier, rng), Quantization::weyl));
    double prev = std::numeric_limits<double>::infinity();
    for (const SchattenIndex& p : order) {
      const double v = schatten_norm(s, p);
      if (v > prev) ++breaks;
      prev = v;
    }
  }
  return {h.violations == 0 && h.rows == 100 && breaks == 0,
          std::to_string(h.violations) + "/" + std::to_string(h.rows) + " Holder violations (worst margin " +
              sci(h.worst_margin) + "), " + std::to_string(breaks) + " monotonicity breaks over 20 symbols"};
}

double cross_check(int m, int L, std::uint64_t seed) {
  const PhaseGrid carrier = PhaseGrid::symbol(make_grid(1, m, L));
  Rng rng(seed);
  BumpOptions o;
  o.center = 0.5;
  o.width_min = 0.9;
  o.width_max = 1.1;
  const PhaseField a = random_smooth_symbol(carrier, rng, o), b = random_smooth_symbol(carrier, rng, o);
  const PhaseField sharp = sharp_product(a, b, Quantization::weyl);
  const PhaseField twisted = cd(1 / std::sqrt(2 * oracle::pi)) * twisted_convolve(a, symplectic_ft(b));
  return oracle::rel_l2_diff(twisted, sharp);
}

Outcome c10() {
  const SuiteSummary inv = summarize("involution", 20);
  const SuiteSummary tr = summarize("transfer", 20);
  const double coarse = cross_check(2, 16, 1010), fine = cross_check(4, 16, 1010);
  const bool ok = inv.violations == 0 && tr.violations == 0 && fine < kCrossCheck && fine <= coarse;
  return {ok, "||F^2 a - a|| max " + sci(inv.worst_lhs) + ", cross-check m=2 " + sci(coarse) + " -> m=4 " +
                  sci(fine) + ", transfer gap max " + sci(tr.worst_lhs)};
}

Outcome c11() {
  TwistConfig cfg;
  cfg.grid = make_grid(1, 2, 4);
  const TwistCtx ctx(cfg);
  Rng rng(1111);
  const PhaseField f = random_phase_field(ctx.carrier(), rng);
  FactorOptions opt;
  opt.eps = 0.1 * ctx.module_norm(f);
  opt.tol = 1e-8;
  const auto res = hewitt_factorize(ctx, f, opt);
  // operator side: V(psi) Op(g) = Op(f)
  const Eigen::MatrixXcd lhs = ctx.V(res.psi) * op_matrix(res.g, Quantization::weyl).m;
  const Eigen::MatrixXcd want = op_matrix(f, Quantization::weyl).m;
  const double op_res = (lhs - want).norm() / want.norm();
  const bool ok = ctx.carrier().x.n == 16 && ctx.carrier().xi.n == 16 && res.residual < kTwistResidual &&
                  op_res < kTwistResidual && std::isfinite(res.psi_norm) && res.psi_norm <= res.r0;
  return {ok, "16x16 carrier, s_2 residual " + sci(res.residual) + " (operator " + sci(op_res) + "), ||psi|| " +
                  sci(res.psi_norm) + " <= r0 " + sci(res.r0) + " (r " + sci(res.r) + ")"};
}

struct Criterion {
  int id;
  const char* name;
  double budget;  // seconds
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> all = {
      {1, "amalgam-lebesgue", 1, c1},
      {2, "young", 5, [] { return from_suite("young", 200, 200); }},
      {3, "twisted-young", 10, [] { return from_suite("twisted-young", 50, 50); }},
      {4, "mollifier", 2, [] { return from_suite("mollifier", 1); }},
      {5, "hewitt-conv", 10, c5},
      {6, "modulation-factor", 30, c6},
      {7, "neumann", 2, c7},
      {8, "rank-one-moyal", 5, c8},
      {9, "schatten-holder", 20, c9},
      {10, "symplectic", 30, c10},
      {11, "twisted-factor", 60, c11},
      {12, "strictness", 1, [] { return from_suite("strictness", 1); }},
      {13, "linfty-failure", 1, [] { return from_suite("linfty-failure", 1); }},
      {14, "window", 10, [] { return from_suite("window", 50); }},
  };
  int failed = 0;
  for (const Criterion& c : all) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.budget;
    const bool pass = out.pass && in_time;
    if (!pass) ++failed;
    std::printf("[%s] %2d %-18s %6.2fs/%gs%s  %s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs, c.budget,
                in_time ? "" : " (over budget)", out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
  return failed == 0 ? 0 : 1;
}
