// tfa command-line driver.
//
// exit codes: 0 ok, 2 usage, 3 assertion failure, 4 numerical failure,
//             5 missing/unreadable file, 6 malformed input file

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tfa/amalgam.hpp"
#include "tfa/error.hpp"
#include "tfa/factor.hpp"
#include "tfa/fourier.hpp"
#include "tfa/io.hpp"
#include "tfa/random.hpp"
#include "tfa/schatten.hpp"
#include "tfa/suites.hpp"
#include "tfa/timefreq.hpp"
#include "tfa/twist.hpp"
#include "tfa/version.hpp"
#include "tfa/weyl.hpp"

namespace {

using namespace tfa;
namespace fs = std::filesystem;

enum Exit { kOk = 0, kUsage = 2, kAssert = 3, kNumerical = 4, kIo = 5, kParse = 6 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Effective configuration, echoed into every report and hashed.
class Config {
 public:
  void set(const std::string& key, const std::string& value) { values_[key] = value; }
  void set(const std::string& key, double value) { values_[key] = io::format_double(value); }
  std::string text() const {
    std::string out;
    for (const auto& [k, v] : values_) out += k + "=" + v + ";";
    return out;
  }
  std::string hash() const { return hex64(fnv1a(text())); }

 private:
  std::map<std::string, std::string> values_;
};

template <class F>
auto usage_guard(F&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

std::uint64_t effective_seed(std::uint64_t flag) {
  const char* env = std::getenv("TFA_SEED");
  if (env == nullptr || *env == '\0') return flag;
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(env, &used, 10);
  } catch (const std::exception&) {
    throw UsageError("TFA_SEED must be a non-negative integer");
  }
  if (used != std::string(env).size()) throw UsageError("TFA_SEED must be a non-negative integer");
  return v;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw Error(ErrorCode::io, "cannot write " + out);
  f << text;
}

std::string header(const Config& cfg, std::uint64_t seed) {
  std::ostringstream s;
  s << "# tfa " << kVersion << '\n'
    << "# seed: " << seed << '\n'
    << "# rng: " << Rng::kName << '\n'
    << "# config_hash: " << cfg.hash() << '\n';
  return s.str();
}

double parse_exponent(const std::string& s, const char* name) {
  return usage_guard([&] {
    double v = 0.0;
    if (s == "inf") {
      v = kInf;
    } else {
      std::size_t used = 0;
      try {
        v = std::stod(s, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != s.size()) throw UsageError(std::string("bad exponent ") + name + " = '" + s + "'");
    }
    validate_exponent(v, name);
    return v;
  });
}

bool is_phase_csv(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw Error(ErrorCode::io, "missing file " + p.string());
  std::string line;
  std::getline(in, line);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line == "ix,ik,re,im";
}

// ------------------------------------------------------------------ norm

struct NormArgs {
  std::string input, space = "lebesgue", p = "2", q = "2", weight = "const", kind = "M", out;
  double window_width = 1.0;
  double A = 0.5;
  std::uint64_t seed = 0;
};

int cmd_norm(const NormArgs& a) {
  const std::uint64_t seed = effective_seed(a.seed);
  const double p = a.space == "schatten" ? 0.0 : parse_exponent(a.p, "p");
  const double q = parse_exponent(a.q, "q");
  Config cfg;
  cfg.set("command", "norm");
  cfg.set("input", a.input);
  cfg.set("space", a.space);
  cfg.set("p", a.p);
  cfg.set("q", a.q);
  cfg.set("weight", a.weight);
  cfg.set("kind", a.kind);
  cfg.set("window_width", a.window_width);
  cfg.set("A", a.A);
  cfg.set("seed", std::to_string(seed));

  double value = 0.0;
  std::string grid;
  if (is_phase_csv(a.input)) {
    const PhaseField F = io::read_phase_field(a.input);
    grid = to_string(F.grid().layout) + "," + std::to_string(F.grid().x.n) + "x" + std::to_string(F.grid().xi.n);
    if (a.space == "lebesgue") {
      value = lp_norm(F, p);
    } else if (a.space == "amalgam") {
      const Weight w = usage_guard([&] { return Weight::parse(a.weight, 2); });
      value = amalgam_norm(F, AmalgamSpace::make(p, q, w));
    } else if (a.space == "mixed") {
      const Weight w = usage_guard([&] { return Weight::parse(a.weight, 2); });
      value = mixed_norm(F, p, q, w);
    } else if (a.space == "schatten") {
      const SchattenIndex idx = usage_guard([&] { return SchattenIndex::parse(a.p); });
      const Quantization A = usage_guard([&] { return quantization_from(a.A); });
      value = schatten_norm(F, idx, A);
    } else {
      throw UsageError("space '" + a.space + "' does not apply to phase fields");
    }
  } else {
    const SampledField f = io::read_field(a.input);
    const GridSpec& g = f.grid();
    grid = std::to_string(g.d) + "," + std::to_string(g.m) + "," + std::to_string(g.L);
    if (a.space == "lebesgue") {
      const Weight w = usage_guard([&] { return Weight::parse(a.weight, g.d); });
      value = lp_norm(f, p, w);
    } else if (a.space == "amalgam") {
      const Weight w = usage_guard([&] { return Weight::parse(a.weight, g.d); });
      value = amalgam_norm(f, AmalgamSpace::make(p, q, w));
    } else if (a.space == "modulation") {
      const Weight w = usage_guard([&] { return Weight::parse(a.weight, 2); });
      if (a.kind != "M" && a.kind != "W") throw UsageError("kind must be M or W");
      const ModulationKind kind = a.kind == "M" ? ModulationKind::M : ModulationKind::W;
      value = modulation_norm(f, gaussian_window(g, a.window_width), ModulationParams{p, q, w, kind});
    } else {
      throw UsageError("space '" + a.space + "' does not apply to sampled fields");
    }
  }
  std::ostringstream s;
  s << header(cfg, seed) << "space,p,q,weight,grid,value\n"
    << a.space << ',' << a.p << ',' << a.q << ',' << a.weight << ",\"" << grid << "\"," << io::format_double(value)
    << '\n';
  emit(s.str(), a.out);
  return kOk;
}

// ------------------------------------------------------------------ verify

struct VerifyArgs {
  std::string suite, out;
  int trials = -1;
  std::uint64_t seed = 1;
};

int cmd_verify(const VerifyArgs& a) {
  if (!is_suite(a.suite)) throw UsageError("unknown suite '" + a.suite + "'");
  if (a.trials < -1) throw UsageError("trials must be non-negative");
  const std::uint64_t seed = effective_seed(a.seed);
  const int trials = a.trials < 0 ? default_trials(a.suite) : a.trials;
  Config cfg;
  cfg.set("command", "verify");
  cfg.set("suite", a.suite);
  cfg.set("trials", std::to_string(trials));
  cfg.set("seed", std::to_string(seed));
  const std::vector<SuiteRow> rows = run_suite(a.suite, SuiteConfig{seed, trials});
  emit(format_suite_report(rows, cfg.text(), seed), a.out);
  for (const SuiteRow& r : rows)
    if (!r.pass) return kAssert;
  return kOk;
}

// ------------------------------------------------------------------ factorize

struct FactorArgs {
  std::string ctx = "conv", f = "gaussian", module = "lebesgue:2", v = "const", out, out_dir, eps_mode = "relative";
  int d = 1, m = 0, L = 0, max_iter = 200;
  double s = 0.5, eps = 0.1, r = 0.0, tol = 1e-10, width = 1.0;
  std::uint64_t seed = 1;
};

ModuleNormSpec parse_module(const std::string& spec) {
  ModuleNormSpec m;
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  const auto comma = rest.find(',');
  if (kind == "lebesgue") {
    m.kind = ModuleNormSpec::Kind::lebesgue;
    m.p = parse_exponent(rest.empty() ? "2" : rest, "module p");
  } else if (kind == "amalgam" || kind == "modulation") {
    m.kind = kind == "amalgam" ? ModuleNormSpec::Kind::amalgam : ModuleNormSpec::Kind::modulation;
    if (comma == std::string::npos) throw UsageError("module '" + spec + "' needs p,q");
    m.p = parse_exponent(rest.substr(0, comma), "module p");
    m.q = parse_exponent(rest.substr(comma + 1), "module q");
  } else {
    throw UsageError("module must be lebesgue:p, amalgam:p,q or modulation:p,q");
  }
  return m;
}

template <class E>
nlohmann::ordered_json result_json(const FactorizationResult<E>& R, double tol) {
  nlohmann::ordered_json j;
  j["trivial"] = R.trivial;
  j["converged"] = R.converged;
  j["eps"] = R.eps;
  j["r"] = R.r;
  j["p"] = R.p;
  j["r0"] = R.r0;
  j["rescale"] = R.rescale;
  j["f_norm"] = R.f_norm;
  j["iterations"] = R.rho.size();
  j["rho"] = R.rho;
  j["widths"] = R.widths;
  j["residual"] = R.residual;
  j["f_minus_g"] = R.f_minus_g;
  j["f_minus_g_bound"] = R.f_minus_g_bound;
  j["psi_norm"] = R.psi_norm;
  j["checks"] = {{"residual", R.residual_ok(tol)},
                 {"g_bound", R.g_bound_ok()},
                 {"psi_bound", R.psi_bound_ok()},
                 {"rho", R.rho_ok()}};
  return j;
}

template <class E>
bool all_checks(const FactorizationResult<E>& R, double tol) {
  return R.residual_ok(tol) && R.g_bound_ok() && R.psi_bound_ok() && R.rho_ok();
}

int cmd_factorize(const FactorArgs& a) {
  const std::uint64_t seed = effective_seed(a.seed);
  if (a.ctx != "conv" && a.ctx != "twist" && a.ctx != "weyl") throw UsageError("ctx must be conv, twist or weyl");
  if (a.eps_mode != "relative" && a.eps_mode != "absolute") throw UsageError("eps-mode must be relative or absolute");
  if (!(a.eps > 0.0)) throw UsageError("eps must be positive");
  if (!(a.tol > 0.0)) throw UsageError("tol must be positive");
  if (a.max_iter < 1) throw UsageError("max-iter must be positive");
  if (!(a.s > 0.0 && a.s <= 1.0)) throw UsageError("s must lie in (0, 1]");
  if (a.r != 0.0 && !(a.r >= 1.0)) throw UsageError("r must be 0 (measured) or at least 1");
  const bool conv = a.ctx == "conv";
  const int m = a.m > 0 ? a.m : (conv ? 8 : 2);
  const int L = a.L > 0 ? a.L : 8;
  const GridSpec grid = usage_guard([&] { return make_grid(conv ? a.d : 1, m, L); });

  Config cfg;
  cfg.set("command", "factorize");
  cfg.set("ctx", a.ctx);
  cfg.set("f", a.f);
  cfg.set("grid", std::to_string(grid.d) + "," + std::to_string(m) + "," + std::to_string(L));
  cfg.set("s", a.s);
  cfg.set("v", a.v);
  cfg.set("module", conv ? a.module : "schatten:2");
  cfg.set("eps", a.eps);
  cfg.set("eps_mode", a.eps_mode);
  cfg.set("r", a.r);
  cfg.set("max_iter", std::to_string(a.max_iter));
  cfg.set("tol", a.tol);
  cfg.set("width", a.width);
  cfg.set("seed", std::to_string(seed));

  FactorOptions opt;
  opt.r = a.r;
  opt.max_iter = a.max_iter;
  opt.tol = a.tol;

  nlohmann::ordered_json j;
  j["tool"] = "tfa";
  j["version"] = kVersion;
  j["seed"] = seed;
  j["rng"] = Rng::kName;
  j["config_hash"] = cfg.hash();
  j["context"] = a.ctx;
  bool ok = true;
  const fs::path dir = a.out_dir;
  if (!a.out_dir.empty()) fs::create_directories(dir);

  if (conv) {
    SampledField f;
    if (a.f == "gaussian") {
      f = gaussian(grid, a.width);
    } else if (a.f == "zero") {
      f = SampledField::zeros(grid);
    } else if (a.f == "random") {
      Rng rng(seed);
      f = random_smooth_field(grid, rng);
    } else {
      f = io::read_field(a.f);  // the file's grid wins over --d/--m/--L
    }
    ConvConfig cc;
    cc.grid = f.grid();
    cc.s = a.s;
    cc.v = usage_guard([&] { return Weight::parse(a.v, cc.grid.d); });
    cc.module = parse_module(a.module);
    const ConvCtx use = usage_guard([&] { return ConvCtx(cc); });
    opt.eps = a.eps_mode == "relative" ? a.eps * use.module_norm(f) : a.eps;
    if (opt.eps == 0.0) opt.eps = a.eps;
    j["module"] = use.config().module.describe();
    const auto R = hewitt_factorize<SampledField>(use, f, opt);
    j["result"] = result_json(R, a.tol);
    ok = all_checks(R, a.tol);
    if (!a.out_dir.empty()) {
      io::write_field(dir / "psi.csv", R.psi);
      io::write_field(dir / "g.csv", R.g);
      j["psi_csv"] = (dir / "psi.csv").string();
      j["g_csv"] = (dir / "g.csv").string();
    }
  } else {
    TwistConfig tc;
    tc.grid = grid;
    tc.s = a.s;
    tc.v = usage_guard([&] { return Weight::parse(a.v, 2); });
    const TwistCtx ctx = usage_guard([&] { return TwistCtx(tc); });
    PhaseField f;
    if (a.f == "gaussian") {
      f = sample(ctx.carrier(), [&](double x, double xi) {
        return cd(std::exp(-0.5 * (x * x + xi * xi) / (a.width * a.width)));
      });
    } else if (a.f == "zero") {
      f = ctx.zero();
    } else if (a.f == "random") {
      Rng rng(seed);
      f = random_smooth_symbol(ctx.carrier(), rng);
    } else {
      f = io::read_phase_field(a.f);
      if (!(f.grid() == ctx.carrier())) throw UsageError("input symbol is not on the carrier of the requested grid");
    }
    opt.eps = a.eps_mode == "relative" ? a.eps * ctx.module_norm(f) : a.eps;
    if (opt.eps == 0.0) opt.eps = a.eps;
    j["module"] = "s_2^w";
    if (a.ctx == "twist") {
      const auto R = hewitt_factorize<PhaseField>(ctx, f, opt);
      j["result"] = result_json(R, a.tol);
      if (!R.trivial)
        j["result"]["reverse_order_residual"] = ctx.module_norm(f - ctx.act(R.g, R.psi)) / R.f_norm;
      ok = all_checks(R, a.tol);
      if (!a.out_dir.empty()) {
        io::write_phase_field(dir / "psi.csv", R.psi);
        io::write_phase_field(dir / "g.csv", R.g);
        j["psi_csv"] = (dir / "psi.csv").string();
        j["g_csv"] = (dir / "g.csv").string();
      }
    } else {
      const WeylFactorization W = weyl_factorize(ctx, f, opt);
      j["result"] = result_json(W.twisted, a.tol);
      j["result"]["weyl_residual"] = W.residual;
      j["result"]["duality_residual"] = W.duality_residual;
      j["result"]["reverse_order_residual"] = W.reverse_residual;
      const bool weyl_ok = W.twisted.trivial || W.residual <= a.tol;
      j["result"]["checks"]["weyl_residual"] = weyl_ok;
      ok = all_checks(W.twisted, a.tol) && weyl_ok;
      if (!a.out_dir.empty()) {
        io::write_phase_field(dir / "psi.csv", W.twisted.psi);
        io::write_phase_field(dir / "g.csv", W.g_weyl);
        j["psi_csv"] = (dir / "psi.csv").string();
        j["g_csv"] = (dir / "g.csv").string();
      }
    }
  }
  j["pass"] = ok;
  emit(j.dump(2) + "\n", a.out);
  return ok ? kOk : kAssert;
}

// ------------------------------------------------------------------ schatten

struct SchattenArgs {
  std::string input, p = "2", spectrum, op, out;
  double A = 0.5;
  std::uint64_t seed = 0;
};

int cmd_schatten(const SchattenArgs& a) {
  const std::uint64_t seed = effective_seed(a.seed);
  const SchattenIndex idx = usage_guard([&] { return SchattenIndex::parse(a.p); });
  const Quantization A = usage_guard([&] { return quantization_from(a.A); });
  Config cfg;
  cfg.set("command", "schatten");
  cfg.set("input", a.input);
  cfg.set("p", idx.to_string());
  cfg.set("A", a.A);
  cfg.set("seed", std::to_string(seed));
  const PhaseField sym = io::read_phase_field(a.input);
  const OperatorMatrix M = op_matrix(sym, A);
  const std::vector<double> sigma = singular_values(M);
  if (!a.spectrum.empty()) io::write_spectrum(a.spectrum, sigma);
  if (!a.op.empty()) io::write_operator(a.op, M);
  std::ostringstream s;
  s << header(cfg, seed) << "p,A,n,sigma_1,norm\n"
    << idx.to_string() << ',' << io::format_double(a.A) << ',' << sigma.size() << ','
    << io::format_double(sigma.empty() ? 0.0 : sigma.front()) << ',' << io::format_double(schatten_norm(sigma, idx))
    << '\n';
  emit(s.str(), a.out);
  return kOk;
}

// ------------------------------------------------------------------ transform

struct TransformArgs {
  std::string kind, input, input2, output, out;
  double A = 0.5, to = 0.0, window_width = 1.0;
  std::uint64_t seed = 0;
};

int cmd_transform(const TransformArgs& a) {
  const std::uint64_t seed = effective_seed(a.seed);
  static const std::vector<std::string> kinds = {"fourier", "inverse-fourier", "stft", "wigner",
                                                 "symplectic", "transfer", "op"};
  if (std::find(kinds.begin(), kinds.end(), a.kind) == kinds.end()) throw UsageError("unknown transform '" + a.kind + "'");
  Config cfg;
  cfg.set("command", "transform");
  cfg.set("kind", a.kind);
  cfg.set("input", a.input);
  cfg.set("input2", a.input2);
  cfg.set("output", a.output);
  cfg.set("A", a.A);
  cfg.set("to", a.to);
  cfg.set("window_width", a.window_width);
  cfg.set("seed", std::to_string(seed));
  std::size_t size = 0;
  if (a.kind == "fourier" || a.kind == "inverse-fourier") {
    const SampledField f = io::read_field(a.input);
    const SampledField out = a.kind == "fourier" ? fourier(f) : inverse_fourier(f);
    io::write_field(a.output, out);
    size = out.size();
  } else if (a.kind == "stft") {
    const SampledField f = io::read_field(a.input);
    const SampledField w = a.input2.empty() ? gaussian_window(f.grid(), a.window_width) : io::read_field(a.input2);
    const PhaseField V = stft(f, w);
    io::write_phase_field(a.output, V);
    size = V.size();
  } else if (a.kind == "wigner") {
    const Quantization A = usage_guard([&] { return quantization_from(a.A); });
    const SampledField f = io::read_field(a.input);
    const SampledField g = a.input2.empty() ? f : io::read_field(a.input2);
    const PhaseField W = wigner(f, g, A);
    io::write_phase_field(a.output, W);
    size = W.size();
  } else if (a.kind == "symplectic") {
    const PhaseField out = symplectic_ft(io::read_phase_field(a.input));
    io::write_phase_field(a.output, out);
    size = out.size();
  } else if (a.kind == "transfer") {
    const Quantization from = usage_guard([&] { return quantization_from(a.A); });
    const Quantization to = usage_guard([&] { return quantization_from(a.to); });
    const PhaseField out = transfer(io::read_phase_field(a.input), from, to);
    io::write_phase_field(a.output, out);
    size = out.size();
  } else {
    const Quantization A = usage_guard([&] { return quantization_from(a.A); });
    const OperatorMatrix M = op_matrix(io::read_phase_field(a.input), A);
    io::write_operator(a.output, M);
    size = static_cast<std::size_t>(M.m.size());
  }
  std::ostringstream s;
  s << header(cfg, seed) << "kind,output,size\n" << a.kind << ',' << a.output << ',' << size << '\n';
  emit(s.str(), a.out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tfa: time-frequency analysis toolkit"};
  app.set_version_flag("--version", std::string(tfa::kVersion));
  app.require_subcommand(1);

  NormArgs norm;
  auto* n = app.add_subcommand("norm", "norm of a field or phase-space field read from CSV");
  n->add_option("-i,--input", norm.input, "field CSV (sidecar <path>.json)")->required();
  n->add_option("--space", norm.space, "lebesgue | amalgam | modulation | mixed | schatten")->capture_default_str();
  n->add_option("-p", norm.p, "exponent p (Schatten index for space=schatten)")->capture_default_str();
  n->add_option("-q", norm.q, "exponent q")->capture_default_str();
  n->add_option("--weight", norm.weight, "const | poly:s | exp:s")->capture_default_str();
  n->add_option("--kind", norm.kind, "modulation norm kind M | W")->capture_default_str();
  n->add_option("--window-width", norm.window_width, "Gaussian window width")->capture_default_str();
  n->add_option("--A", norm.A, "quantization 0 or 0.5")->capture_default_str();
  n->add_option("--seed", norm.seed, "seed echoed into the report")->capture_default_str();
  n->add_option("-o,--out", norm.out, "report path (default stdout)");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "run a verification suite");
  v->add_option("--suite", verify.suite, "suite name")->required();
  v->add_option("--trials", verify.trials, "trial count (default: suite default)");
  v->add_option("--seed", verify.seed, "seed")->capture_default_str();
  v->add_option("-o,--out", verify.out, "report path (default stdout)");

  FactorArgs fa;
  auto* f = app.add_subcommand("factorize", "Hewitt factorization f = psi . g");
  f->add_option("--ctx", fa.ctx, "conv | twist | weyl")->capture_default_str();
  f->add_option("--f", fa.f, "gaussian | zero | random | path to CSV")->capture_default_str();
  f->add_option("--d", fa.d, "dimension (conv)")->capture_default_str();
  f->add_option("--m", fa.m, "samples per unit length (default 8 conv, 2 twist)");
  f->add_option("--L", fa.L, "side length (default 8)");
  f->add_option("--s", fa.s, "algebra WL^{1,s}")->capture_default_str();
  f->add_option("--v", fa.v, "algebra weight")->capture_default_str();
  f->add_option("--module", fa.module, "lebesgue:p | amalgam:p,q | modulation:p,q (conv)")->capture_default_str();
  f->add_option("--eps", fa.eps, "epsilon")->capture_default_str();
  f->add_option("--eps-mode", fa.eps_mode, "relative (eps * ||f||) | absolute")->capture_default_str();
  f->add_option("--r", fa.r, "unit radius (0: measured)")->capture_default_str();
  f->add_option("--max-iter", fa.max_iter, "iteration cap")->capture_default_str();
  f->add_option("--tol", fa.tol, "relative residual target")->capture_default_str();
  f->add_option("--width", fa.width, "width of the built-in Gaussian")->capture_default_str();
  f->add_option("--seed", fa.seed, "seed for f=random")->capture_default_str();
  f->add_option("--out-dir", fa.out_dir, "directory for psi.csv and g.csv");
  f->add_option("-o,--out", fa.out, "report path (default stdout)");

  SchattenArgs sa;
  auto* s = app.add_subcommand("schatten", "Schatten norm of a symbol");
  s->add_option("-i,--input", sa.input, "symbol CSV on the symbol carrier")->required();
  s->add_option("-p", sa.p, "index: number, inf or sharp")->capture_default_str();
  s->add_option("--A", sa.A, "quantization 0 or 0.5")->capture_default_str();
  s->add_option("--spectrum", sa.spectrum, "write j,sigma CSV");
  s->add_option("--operator", sa.op, "write i,j,re,im CSV");
  s->add_option("--seed", sa.seed, "seed echoed into the report")->capture_default_str();
  s->add_option("-o,--out", sa.out, "report path (default stdout)");

  TransformArgs ta;
  auto* t = app.add_subcommand("transform", "apply a transform and write the result");
  t->add_option("--kind", ta.kind, "fourier | inverse-fourier | stft | wigner | symplectic | transfer | op")->required();
  t->add_option("-i,--input", ta.input, "input CSV")->required();
  t->add_option("--input2", ta.input2, "window (stft) or second field (wigner)");
  t->add_option("--output", ta.output, "output CSV")->required();
  t->add_option("--A", ta.A, "quantization (source for transfer)")->capture_default_str();
  t->add_option("--to", ta.to, "target quantization for transfer")->capture_default_str();
  t->add_option("--window-width", ta.window_width, "Gaussian window width")->capture_default_str();
  t->add_option("--seed", ta.seed, "seed echoed into the report")->capture_default_str();
  t->add_option("-o,--out", ta.out, "report path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*n) return cmd_norm(norm);
    if (*v) return cmd_verify(verify);
    if (*f) return cmd_factorize(fa);
    if (*s) return cmd_schatten(sa);
    if (*t) return cmd_transform(ta);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const tfa::Error& e) {
    std::cerr << e.what() << '\n';
    if (e.code() == tfa::ErrorCode::io) return kIo;
    if (e.code() == tfa::ErrorCode::parse) return kParse;
    if (tfa::is_numerical(e.code())) return kNumerical;
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumerical;
  }
  return kUsage;
}
