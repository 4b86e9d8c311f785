#include "tfa/schatten.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "tfa/amalgam.hpp"
#include "tfa/error.hpp"
#include "tfa/norms.hpp"
#include "tfa/twist.hpp"

namespace tfa {

SchattenIndex SchattenIndex::finite(double p) {
  if (!(p > 0.0) || std::isnan(p)) throw Error(ErrorCode::invalid_argument, "Schatten exponent must be positive");
  return {p, false};
}

SchattenIndex SchattenIndex::infinity() { return {kInf, false}; }
SchattenIndex SchattenIndex::compact() { return {kInf, true}; }

SchattenIndex SchattenIndex::parse(const std::string& s) {
  if (s == "sharp" || s == "#") return compact();
  if (s == "inf" || s == "infinity") return infinity();
  std::size_t used = 0;
  double p = 0.0;
  try {
    p = std::stod(s, &used);
  } catch (const std::exception&) {
    throw Error(ErrorCode::invalid_argument, "bad Schatten index '" + s + "'");
  }
  if (used != s.size()) throw Error(ErrorCode::invalid_argument, "bad Schatten index '" + s + "'");
  return std::isinf(p) ? infinity() : finite(p);
}

double SchattenIndex::exponent() const { return sharp ? kInf : p; }

std::string SchattenIndex::to_string() const {
  if (sharp) return "sharp";
  if (std::isinf(p)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", p);
  return buf;
}

bool operator<(const SchattenIndex& a, const SchattenIndex& b) {
  auto rank = [](const SchattenIndex& s) { return s.sharp ? 1 : (std::isinf(s.p) ? 2 : 0); };
  if (rank(a) != rank(b)) return rank(a) < rank(b);
  return rank(a) == 0 && a.p < b.p;
}

std::vector<double> singular_values(const OperatorMatrix& M) {
  if (!M.m.allFinite()) throw Error(ErrorCode::numerical, "operator matrix has non-finite entries");
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(M.m);
  if (svd.info() != Eigen::Success) throw Error(ErrorCode::numerical, "SVD failed");
  const Eigen::VectorXd& s = svd.singularValues();
  return {s.data(), s.data() + s.size()};
}

namespace {

double roundoff_floor(const std::vector<double>& sigma) {
  if (sigma.empty()) return 0.0;
  const double top = *std::max_element(sigma.begin(), sigma.end());
  return static_cast<double>(sigma.size()) * std::numeric_limits<double>::epsilon() * top;
}

}  // namespace

double schatten_norm(const std::vector<double>& sigma, const SchattenIndex& p) {
  const double e = p.exponent();
  if (std::isinf(e)) return sigma.empty() ? 0.0 : *std::max_element(sigma.begin(), sigma.end());
  // for p < 1 a few hundred values at 1e-16 sigma_1 would otherwise show up at the 1e-3 level
  const double floor = roundoff_floor(sigma);
  PowerSum sum(e);
  for (double s : sigma)
    if (s > floor) sum.add(s);
  return sum.result(1.0);
}

double schatten_norm(const PhaseField& a, const SchattenIndex& p, Quantization A) {
  return schatten_norm(singular_values(op_matrix(a, A)), p);
}

SpectralData spectral_decompose(const PhaseField& a, Quantization A) {
  const OperatorMatrix M = op_matrix(a, A);
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(M.m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (svd.info() != Eigen::Success) throw Error(ErrorCode::numerical, "SVD failed");
  SpectralData out{M.grid, {}, {}, {}};
  const double root_h = std::sqrt(M.grid.h());
  const double root_2pi = std::sqrt(2.0 * std::numbers::pi);
  const Eigen::VectorXd& s = svd.singularValues();
  const double floor = roundoff_floor({s.data(), s.data() + s.size()});
  for (Eigen::Index j = 0; j < s.size() && s(j) > floor; ++j) {
    out.lambda.push_back(root_2pi * s(j));
    std::vector<cd> u(M.grid.n()), v(M.grid.n());
    for (int i = 0; i < M.grid.n(); ++i) {
      u[i] = svd.matrixU()(i, j) / root_h;
      v[i] = svd.matrixV()(i, j) / root_h;
    }
    out.f.emplace_back(M.grid, std::move(u));
    out.g.emplace_back(M.grid, std::move(v));
  }
  return out;
}

PhaseField reconstruct(const SpectralData& s, Quantization A) {
  PhaseField a = PhaseField::zeros(PhaseGrid::symbol(s.grid));
  for (std::size_t j = 0; j < s.lambda.size(); ++j) a = a + cd(s.lambda[j]) * wigner(s.f[j], s.g[j], A);
  return a;
}

SchattenConvCheck schatten_conv_check(const PhaseField& b, const PhaseField& a, double p, Quantization A) {
  if (!(p > 0.0 && p <= 1.0)) throw Error(ErrorCode::invalid_argument, "schatten_conv_check needs 0 < p <= 1");
  SchattenConvCheck out;
  out.constant = std::pow(16.0, 1.0 / p);
  const SchattenIndex idx = SchattenIndex::finite(p);
  if (a.is_zero()) return out;
  out.lhs = schatten_norm(convolve(a, b), idx, A);
  out.bound = out.constant * schatten_norm(a, idx, A) *
              amalgam_norm(b, AmalgamSpace::make(1.0, p, Weight::constant(2)));
  return out;
}

}  // namespace tfa
