#include "tfa/weight.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "tfa/error.hpp"

namespace tfa {

namespace {

double norm2(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

double eval(WeightKind kind, double s, std::span<const double> x) {
  switch (kind) {
    case WeightKind::constant: return 1.0;
    case WeightKind::polynomial: return std::pow(1.0 + norm2(x), 0.5 * s);
    case WeightKind::exponential: return std::exp(s * std::sqrt(norm2(x)));
  }
  return 1.0;
}

std::vector<std::vector<double>> probe_lattice(int dim) {
  std::vector<std::vector<double>> pts;
  if (dim == 1) {
    for (int i = -24; i <= 24; ++i) pts.push_back({0.25 * i});
  } else {
    for (int i = -4; i <= 4; ++i)
      for (int j = -4; j <= 4; ++j) pts.push_back({1.0 * i, 1.0 * j});
  }
  return pts;
}

}  // namespace

Weight::Weight(WeightKind kind, double s, int dim) : kind_(kind), s_(s), dim_(dim) {
  if (dim < 1 || dim > 2) throw Error(ErrorCode::invalid_argument, "weight dimension must be 1 or 2");
  if (!std::isfinite(s)) throw Error(ErrorCode::invalid_argument, "weight exponent must be finite");
  if (kind == WeightKind::constant) s_ = 0.0;
  const double a = std::abs(s_);
  switch (kind_) {
    case WeightKind::constant:
      c_v_ = 1.0;
      moderation_ = 1.0;
      break;
    case WeightKind::polynomial:
      c_v_ = std::pow(1.0 + dim_, 0.5 * a);
      moderation_ = std::pow(2.0, 0.5 * a);  // Peetre
      break;
    case WeightKind::exponential:
      c_v_ = std::exp(a * std::sqrt(static_cast<double>(dim_)));
      moderation_ = 1.0;
      break;
  }
  const auto pts = probe_lattice(dim_);
  std::vector<double> sum(dim_);
  measured_ = 0.0;
  for (const auto& x : pts) {
    for (const auto& y : pts) {
      for (int i = 0; i < dim_; ++i) sum[i] = x[i] + y[i];
      measured_ = std::max(measured_, omega(sum) / (omega(x) * v(y)));
    }
  }
}

double Weight::omega(std::span<const double> x) const { return eval(kind_, s_, x); }

double Weight::v(std::span<const double> x) const { return eval(kind_, std::abs(s_), x); }

Weight Weight::companion() const { return {kind_, std::abs(s_), dim_}; }

Weight Weight::parse(const std::string& spec, int dim) {
  if (spec.empty() || spec == "const" || spec == "constant") return constant(dim);
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw Error(ErrorCode::parse, "weight spec '" + spec + "'");
  const std::string kind = spec.substr(0, colon);
  double s = 0.0;
  try {
    std::size_t used = 0;
    s = std::stod(spec.substr(colon + 1), &used);
    if (used != spec.size() - colon - 1) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw Error(ErrorCode::parse, "weight exponent in '" + spec + "'");
  }
  if (kind == "poly") return polynomial(s, dim);
  if (kind == "exp") return exponential(s, dim);
  throw Error(ErrorCode::parse, "weight kind '" + kind + "'");
}

std::string Weight::spec() const {
  char buf[64];
  switch (kind_) {
    case WeightKind::constant: return "const";
    case WeightKind::polynomial: std::snprintf(buf, sizeof buf, "poly:%.17g", s_); return buf;
    case WeightKind::exponential: std::snprintf(buf, sizeof buf, "exp:%.17g", s_); return buf;
  }
  return "const";
}

}  // namespace tfa
