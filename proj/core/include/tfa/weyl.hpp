#pragma once

#include <Eigen/Dense>

#include "tfa/field.hpp"
#include "tfa/phase.hpp"

namespace tfa {

// A = 0 (Kohn-Nirenberg) or A = 1/2 (Weyl).
enum class Quantization { kohn_nirenberg, weyl };

Quantization quantization_from(double A);
double quantization_value(Quantization q);

// M_ij = h K(x_i, x_j) on the spatial grid.
struct OperatorMatrix {
  GridSpec grid;
  Eigen::MatrixXcd m;
};

// Symbols live on PhaseGrid::symbol(grid): z_s = -L/2 + s h/2 (2n rows) and
// xi_k = -pi/h + k pi/L (2n columns). A Weyl entry (i, j) reads row s = i + j; a
// Kohn-Nirenberg entry reads row s = 2i.
OperatorMatrix op_matrix(const PhaseField& a, Quantization A);

// Right inverse of op_matrix: op_matrix(symbol_of(M, A), A) == M. For A = 1/2 the result
// is band-limited to |xi| < pi/(2h); for A = 0 the odd rows are trigonometric interpolants.
PhaseField symbol_of(const OperatorMatrix& M, Quantization A);

// W^A_{f,g}; op_matrix(wigner(f, g, A), A) is the rank-one matrix (2 pi)^{-1/2} h f g^*.
PhaseField wigner(const SampledField& f, const SampledField& g, Quantization A);

// Symbol b with Op_to(b) = Op_from(a), via the Fourier multiplier on the carrier.
PhaseField transfer(const PhaseField& a, Quantization from, Quantization to);

// symbol_of(op(a) op(b))
PhaseField sharp_product(const PhaseField& a, const PhaseField& b, Quantization A);

// (P f)(x) = f(-x)
Eigen::MatrixXcd parity_matrix(int n);

// Matrix of f -> (2 pi)^{-1/2} (f, g) f0 under the h-weighted inner product.
Eigen::MatrixXcd rank_one(const SampledField& f0, const SampledField& g);

void require_symbol_carrier(const PhaseGrid& g);

}  // namespace tfa
