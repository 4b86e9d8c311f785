#pragma once

#include <string>
#include <vector>

#include "tfa/weyl.hpp"

namespace tfa {

// p in (0, inf], or the compact-operator index "sharp" which sits between the finite
// exponents and infinity. In finite dimensions its norm is the operator norm.
struct SchattenIndex {
  double p = 2.0;
  bool sharp = false;

  static SchattenIndex finite(double p);
  static SchattenIndex infinity();
  static SchattenIndex compact();
  static SchattenIndex parse(const std::string& s);

  // exponent used for the l^p sum (inf for sharp)
  double exponent() const;
  std::string to_string() const;
};

bool operator<(const SchattenIndex& a, const SchattenIndex& b);

// decreasing
std::vector<double> singular_values(const OperatorMatrix& M);
// Finite p skips singular values at or below n eps sigma_1 (numerical rank).
double schatten_norm(const std::vector<double>& sigma, const SchattenIndex& p);
double schatten_norm(const PhaseField& a, const SchattenIndex& p, Quantization A);

// a = sum_j lambda_j W^A_{f_j, g_j} with orthonormal f_j, g_j, over the numerical rank.
struct SpectralData {
  GridSpec grid;
  std::vector<double> lambda;
  std::vector<SampledField> f;
  std::vector<SampledField> g;
};

SpectralData spectral_decompose(const PhaseField& a, Quantization A);
PhaseField reconstruct(const SpectralData& s, Quantization A);

struct SchattenConvCheck {
  double lhs = 0.0;
  double bound = 0.0;
  double constant = 0.0;
};

// ||a * b||_{s_p} against C ||a||_{s_p} ||b||_{WL^{1,p}} with C = 16^{1/p}, p <= 1.
SchattenConvCheck schatten_conv_check(const PhaseField& b, const PhaseField& a, double p, Quantization A);

}  // namespace tfa
