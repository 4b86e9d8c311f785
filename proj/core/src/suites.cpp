#include "tfa/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

#include "tfa/amalgam.hpp"
#include "tfa/error.hpp"
#include "tfa/io.hpp"
#include "tfa/random.hpp"
#include "tfa/schatten.hpp"
#include "tfa/timefreq.hpp"
#include "tfa/twist.hpp"
#include "tfa/version.hpp"
#include "tfa/weyl.hpp"

namespace tfa {

namespace {

SuiteRow le(const std::string& suite, int trial, std::string label, double lhs, double bound) {
  return {suite, trial, std::move(label), lhs, bound, bound - lhs, lhs <= bound};
}

SuiteRow ge(const std::string& suite, int trial, std::string label, double lhs, double bound) {
  return {suite, trial, std::move(label), lhs, bound, lhs - bound, lhs >= bound};
}

std::string num(double x) {
  std::ostringstream s;
  s << x;
  return s.str();
}

struct YoungCase {
  double p, q, r;
  const char* weight;
};

std::vector<SuiteRow> young(const SuiteConfig& cfg) {
  static const YoungCase cases[] = {{2, 1, 0.5, "const"}, {1, 0.5, 0.5, "const"}, {4, 2, 1, "const"}, {2, 1, 0.5, "poly:1"}};
  const GridSpec grid = make_grid(1, 4, 16);
  std::vector<SuiteRow> rows;
  for (int t = 0; t < cfg.trials; ++t) {
    const YoungCase& c = cases[t % 4];
    Rng rng(trial_seed(cfg.seed, t));
    const Weight w = Weight::parse(c.weight, 1);
    const SampledField f = (t / 4) % 2 ? random_smooth_field(grid, rng) : random_field(grid, rng, 2.0);
    const SampledField g = (t / 8) % 2 ? random_smooth_field(grid, rng) : random_field(grid, rng, 3.0);
    const auto [lhs, bound] =
        young_check(f, g, AmalgamSpace::make(1.0, c.r, w.companion()), AmalgamSpace::make(c.p, c.q, w));
    rows.push_back(le("young", t, "p=" + num(c.p) + " q=" + num(c.q) + " r=" + num(c.r) + " w=" + c.weight, lhs, bound));
  }
  return rows;
}

std::vector<SuiteRow> twisted_young(const SuiteConfig& cfg) {
  static const YoungCase cases[] = {{2, 1, 0.5, "const"}, {1, 0.5, 0.5, "const"}, {4, 2, 1, "const"}, {1, 1, 1, "const"}};
  const PhaseGrid grid = PhaseGrid::square(16, 0.5);
  const Weight one = Weight::constant(2);
  std::vector<SuiteRow> rows;
  for (int t = 0; t < cfg.trials; ++t) {
    const YoungCase& c = cases[t % 4];
    Rng rng(trial_seed(cfg.seed, t));
    const PhaseField a = t % 2 ? random_smooth_symbol(grid, rng) : random_phase_field(grid, rng);
    const PhaseField b = random_phase_field(grid, rng, 1.5);
    const auto [lhs, bound] = twisted_young_check(a, b, c.r, c.p, c.q, one, one);
    rows.push_back(le("twisted-young", t, "p=" + num(c.p) + " q=" + num(c.q) + " r=" + num(c.r), lhs, bound));
  }
  return rows;
}

std::vector<SuiteRow> moyal(const SuiteConfig& cfg) {
  const GridSpec grid = make_grid(1, 4, 12);
  BumpOptions opt;
  opt.bumps = 2;
  opt.center = 1.0;
  opt.width_min = 0.6;
  opt.width_max = 1.0;
  opt.frequency = 1.5;
  std::vector<SuiteRow> rows;
  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng(trial_seed(cfg.seed, t));
    const SampledField f = random_smooth_field(grid, rng, opt);
    const SampledField g = random_smooth_field(grid, rng, opt);
    const Quantization A = t % 2 ? Quantization::kohn_nirenberg : Quantization::weyl;
    const double lhs = lp_norm(wigner(f, g, A), 2.0);
    const double target = lp_norm(f, 2.0) * lp_norm(g, 2.0);
    rows.push_back(le("moyal", t, A == Quantization::weyl ? "A=1/2" : "A=0", std::abs(lhs - target) / target, 1e-6));
  }
  return rows;
}

std::vector<SuiteRow> holder(const SuiteConfig& cfg) {
  struct Case {
    double p, q;
  };
  static const Case cases[] = {{2, 2}, {1, INFINITY}, {2.0 / 3.0, 2}};
  const GridSpec grid = make_grid(1, 2, 8);
  const PhaseGrid carrier = PhaseGrid::symbol(grid);
  std::vector<SuiteRow> rows;
  for (int t = 0; t < cfg.trials; ++t) {
    const Case& c = cases[t % 3];
    Rng rng(trial_seed(cfg.seed, t));
    const PhaseField a = random_smooth_symbol(carrier, rng);
    const PhaseField b = random_smooth_symbol(carrier, rng);
    const double r = 1.0 / (1.0 / c.p + 1.0 / c.q);
    const auto idx = [](double e) { return std::isinf(e) ? SchattenIndex::infinity() : SchattenIndex::finite(e); };
    const double lhs = schatten_norm(sharp_product(a, b, Quantization::weyl), idx(r), Quantization::weyl);
    const double bound = schatten_norm(a, idx(c.p), Quantization::weyl) * schatten_norm(b, idx(c.q), Quantization::weyl);
    rows.push_back(le("holder", t, "p=" + num(c.p) + " q=" + num(c.q), lhs, bound + 1e-10));
  }
  return rows;
}

std::vector<SuiteRow> involution(const SuiteConfig& cfg) {
  std::vector<SuiteRow> rows;
  const PhaseGrid square = PhaseGrid::square(16, std::sqrt(std::numbers::pi / 16.0));
  const PhaseGrid carrier = PhaseGrid::symbol(make_grid(1, 2, 8));
  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng(trial_seed(cfg.seed, t));
    const bool on_square = t % 2 == 0;
    const PhaseField a = random_phase_field(on_square ? square : carrier, rng);
    const double gap = lp_norm(symplectic_ft(symplectic_ft(a)) - a, 2.0) / lp_norm(a, 2.0);
    rows.push_back(le("involution", t, on_square ? "square" : "symbol", gap, 1e-8));
  }
  return rows;
}

std::vector<SuiteRow> transfer_suite(const SuiteConfig& cfg) {
  const GridSpec grid = make_grid(1, 2, 8);
  const PhaseGrid carrier = PhaseGrid::symbol(grid);
  std::vector<SuiteRow> rows;
  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng(trial_seed(cfg.seed, t));
    const PhaseField a = random_smooth_symbol(carrier, rng);
    const bool forward = t % 2 == 0;
    const Quantization from = forward ? Quantization::kohn_nirenberg : Quantization::weyl;
    const Quantization to = forward ? Quantization::weyl : Quantization::kohn_nirenberg;
    const Eigen::MatrixXcd gap = op_matrix(a, from).m - op_matrix(transfer(a, from, to), to).m;
    const double opnorm = singular_values(OperatorMatrix{grid, gap}).front();
    rows.push_back(le("transfer", t, forward ? "0->1/2" : "1/2->0", opnorm, 1e-6));
  }
  return rows;
}

std::vector<SuiteRow> mollifier(const SuiteConfig& cfg) {
  if (cfg.trials == 0) return {};
  const GridSpec grid = make_grid(1, 16, 16);
  const SampledField f = gaussian(grid, 1.0);
  const AmalgamSpace M = AmalgamSpace::make(2.0, 1.0);
  std::vector<SuiteRow> rows;
  double prev = INFINITY;
  for (int k = 0; k <= 5; ++k) {
    const double eps = std::ldexp(1.0, -k);
    const double res = amalgam_norm(convolve(gaussian_mollifier(grid, eps), f) - f, M);
    SuiteRow row = k == 0 ? le("mollifier", k, "eps=" + num(eps), res, INFINITY)
                          : le("mollifier", k, "eps=" + num(eps) + " decrease", res, prev);
    if (k > 0) row.pass = res < prev;
    rows.push_back(row);
    prev = res;
  }
  rows.push_back(le("mollifier", 6, "final<1e-2", prev, 1e-2));
  return rows;
}

std::vector<SuiteRow> strictness(const SuiteConfig& cfg) {
  if (cfg.trials == 0) return {};
  const std::size_t J = 10000;
  std::vector<double> t(J);
  for (std::size_t j = 0; j < J; ++j) t[j] = 1.0 / ((j + 1.0) * (j + 1.0));
  const auto [l1, wl] = strictness_witness(t, J, 0.5);
  return {le("strictness", 0, "L1", l1, 1.645), ge("strictness", 1, "WL/L1", wl / l1, 50.0)};
}

std::vector<SuiteRow> linfty(const SuiteConfig& cfg) {
  if (cfg.trials == 0) return {};
  const GridSpec grid = make_grid(1, 16, 16);
  const std::vector<double> eps = linfty_ladder(grid);
  const std::vector<double> gaps = linfty_failure_witness(indicator(grid, 0.0, 1.0), eps);
  std::vector<SuiteRow> rows;
  for (std::size_t k = 0; k < eps.size(); ++k)
    rows.push_back(ge("linfty-failure", static_cast<int>(k), "eps=" + num(eps[k]), gaps[k], 0.4));
  return rows;
}

std::vector<SuiteRow> window(const SuiteConfig& cfg) {
  if (cfg.trials == 0) return {};
  const ModulationParams params{2.0, 1.0, Weight::constant(2), ModulationKind::M};
  BumpOptions opt;
  opt.center = 3.0;
  opt.width_min = 0.5;
  opt.width_max = 1.5;
  opt.frequency = 3.0;
  std::vector<SuiteRow> rows;
  double lo[2] = {INFINITY, INFINITY}, hi[2] = {0.0, 0.0};
  const int ms[2] = {4, 8};
  for (int t = 0; t < cfg.trials; ++t) {
    double ratio[2];
    for (int level = 0; level < 2; ++level) {
      const GridSpec grid = make_grid(1, ms[level], 16);
      Rng rng(trial_seed(cfg.seed, t));
      const SampledField f = random_smooth_field(grid, rng, opt);
      ratio[level] = modulation_norm(f, gaussian_window(grid, 1.0), params) /
                     modulation_norm(f, gaussian_window(grid, 2.0), params);
      lo[level] = std::min(lo[level], ratio[level]);
      hi[level] = std::max(hi[level], ratio[level]);
    }
    rows.push_back(le("window", t, "ratio m=4 vs m=8", std::abs(ratio[0] - ratio[1]) / ratio[0], 0.2));
  }
  const double change = std::max(std::abs(lo[1] - lo[0]) / lo[0], std::abs(hi[1] - hi[0]) / hi[0]);
  rows.push_back(le("window", cfg.trials, "interval [" + num(lo[0]) + "," + num(hi[0]) + "] -> [" + num(lo[1]) + "," +
                                              num(hi[1]) + "]",
                    change, 0.2));
  return rows;
}

using SuiteFn = std::function<std::vector<SuiteRow>(const SuiteConfig&)>;

const std::map<std::string, std::pair<SuiteFn, int>>& registry() {
  static const std::map<std::string, std::pair<SuiteFn, int>> r = {
      {"young", {young, 200}},
      {"twisted-young", {twisted_young, 50}},
      {"moyal", {moyal, 20}},
      {"holder", {holder, 100}},
      {"involution", {involution, 20}},
      {"transfer", {transfer_suite, 20}},
      {"mollifier", {mollifier, 1}},
      {"strictness", {strictness, 1}},
      {"linfty-failure", {linfty, 1}},
      {"window", {window, 50}},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"young",      "twisted-young", "moyal",          "holder", "involution",
                                                 "transfer",   "mollifier",     "strictness",     "linfty-failure",
                                                 "window"};
  return names;
}

bool is_suite(const std::string& name) { return registry().count(name) != 0; }

int default_trials(const std::string& name) {
  auto it = registry().find(name);
  if (it == registry().end()) throw Error(ErrorCode::invalid_argument, "unknown suite '" + name + "'");
  return it->second.second;
}

std::vector<SuiteRow> run_suite(const std::string& name, const SuiteConfig& cfg) {
  auto it = registry().find(name);
  if (it == registry().end()) throw Error(ErrorCode::invalid_argument, "unknown suite '" + name + "'");
  SuiteConfig c = cfg;
  if (c.trials < 0) c.trials = it->second.second;
  return it->second.first(c);
}

std::uint64_t trial_seed(std::uint64_t seed, int trial) {
  // splitmix64 finalizer over (seed, trial)
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (static_cast<std::uint64_t>(trial) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex64(std::uint64_t x) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

std::string format_suite_report(const std::vector<SuiteRow>& rows, const std::string& config_text, std::uint64_t seed) {
  std::ostringstream out;
  out << "# tfa " << kVersion << '\n';
  out << "# seed: " << seed << '\n';
  out << "# rng: " << Rng::kName << '\n';
  out << "# config_hash: " << hex64(fnv1a(config_text)) << '\n';
  out << "suite,trial,label,lhs,bound,margin,pass\n";
  for (const SuiteRow& r : rows) {
    out << r.suite << ',' << r.trial << ',' << r.label << ',' << io::format_double(r.lhs) << ','
        << io::format_double(r.bound) << ',' << io::format_double(r.margin) << ',' << (r.pass ? "true" : "false")
        << '\n';
  }
  return out.str();
}

}  // namespace tfa
