#include "tfa/weyl.hpp"

#include <cmath>
#include <numbers>

#include "fft.hpp"
#include "tfa/error.hpp"

namespace tfa {

namespace {

double parity_sign(int t) { return (t & 1) ? -1.0 : 1.0; }

int wrap(int i, int n) { return ((i % n) + n) % n; }

const GridSpec& base_of(const PhaseGrid& g) {
  require_symbol_carrier(g);
  return *g.base;
}

// Fills odd rows by trigonometric interpolation of the even rows along z.
void interpolate_odd_rows(std::vector<cd>& sym, int n) {
  const int cols = 2 * n;
  std::vector<cd> column(n);
  for (int k = 0; k < cols; ++k) {
    for (int i = 0; i < n; ++i) column[i] = sym[static_cast<std::size_t>(2 * i) * cols + k];
    detail::fft(column, {n}, -1);
    for (int p = 0; p < n; ++p) {
      const int pc = p < n / 2 ? p : p - n;
      if (pc == -n / 2) {
        column[p] = 0.0;  // the Nyquist cosine vanishes at half-integer nodes
      } else {
        column[p] *= std::polar(1.0 / n, std::numbers::pi * pc / n);
      }
    }
    detail::fft(column, {n}, +1);
    for (int i = 0; i < n; ++i) sym[static_cast<std::size_t>(2 * i + 1) * cols + k] = column[i];
  }
}

}  // namespace

Quantization quantization_from(double A) {
  if (A == 0.0) return Quantization::kohn_nirenberg;
  if (A == 0.5) return Quantization::weyl;
  throw Error(ErrorCode::unsupported_quantization, "A must be 0 or 1/2");
}

double quantization_value(Quantization q) { return q == Quantization::weyl ? 0.5 : 0.0; }

void require_symbol_carrier(const PhaseGrid& g) {
  if (g.layout != PhaseLayout::symbol || !g.base || g.base->d != 1)
    throw Error(ErrorCode::carrier_mismatch, "symbol must live on the half-grid symbol carrier");
}

OperatorMatrix op_matrix(const PhaseField& a, Quantization A) {
  const GridSpec& g = base_of(a.grid());
  const int n = g.n();
  const int cols = 2 * n;
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(n, n);
  std::vector<cd> row(cols);
  const int step = A == Quantization::weyl ? 1 : 2;
  for (int s = 0; s <= 2 * n - 2; s += step) {
    for (int k = 0; k < cols; ++k) row[k] = a.at(s, k);
    detail::fft(row, {cols}, +1);
    auto coeff = [&](int t) { return parity_sign(t) / cols * row[wrap(t, cols)]; };
    if (A == Quantization::weyl) {
      for (int i = std::max(0, s - n + 1); i <= std::min(s, n - 1); ++i) {
        const int j = s - i;
        M(i, j) = coeff(i - j);
      }
    } else {
      const int i = s / 2;
      for (int j = 0; j < n; ++j) M(i, j) = coeff(i - j);
    }
  }
  return {g, M};
}

PhaseField symbol_of(const OperatorMatrix& M, Quantization A) {
  const GridSpec& g = M.grid;
  const int n = g.n();
  if (M.m.rows() != n || M.m.cols() != n) throw Error(ErrorCode::invalid_argument, "operator size does not match grid");
  const PhaseGrid pg = PhaseGrid::symbol(g);
  const int cols = 2 * n;
  std::vector<cd> sym(pg.size());
  std::vector<cd> c(cols);
  if (A == Quantization::weyl) {
    for (int s = 0; s < cols; ++s) {
      std::fill(c.begin(), c.end(), cd{});
      for (int i = std::max(0, s - n + 1); i <= std::min(s, n - 1); ++i) {
        const int j = s - i;
        c[wrap(i - j, cols)] = parity_sign(i - j) * M.m(i, j);
      }
      detail::fft(c, {cols}, -1);
      for (int k = n / 2; k < n / 2 + n; ++k) sym[static_cast<std::size_t>(s) * cols + k] = 2.0 * c[k];
    }
  } else {
    for (int i = 0; i < n; ++i) {
      std::fill(c.begin(), c.end(), cd{});
      for (int j = 0; j < n; ++j) c[wrap(i - j, cols)] = parity_sign(i - j) * M.m(i, j);
      detail::fft(c, {cols}, -1);
      for (int k = 0; k < cols; ++k) sym[static_cast<std::size_t>(2 * i) * cols + k] = c[k];
    }
    interpolate_odd_rows(sym, n);
  }
  return PhaseField(pg, std::move(sym));
}

PhaseField wigner(const SampledField& f, const SampledField& g, Quantization A) {
  require_same_grid(f, g);
  const GridSpec& gs = f.grid();
  if (gs.d != 1 || f.domain() != Domain::space)
    throw Error(ErrorCode::carrier_mismatch, "Wigner distributions need d = 1 space-domain fields");
  const int n = gs.n();
  const int cols = 2 * n;
  const PhaseGrid pg = PhaseGrid::symbol(gs);
  std::vector<cd> W(pg.size());
  std::vector<cd> c(cols);
  const double root = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  if (A == Quantization::weyl) {
    // u = t h runs over the parity class of s, so the u-quadrature weight is 2h.
    const double scale = root * 2.0 * gs.h();
    for (int s = 0; s < cols; ++s) {
      std::fill(c.begin(), c.end(), cd{});
      for (int i = std::max(0, s - n + 1); i <= std::min(s, n - 1); ++i) {
        const int j = s - i;
        c[wrap(i - j, cols)] = parity_sign(i - j) * f[i] * std::conj(g[j]);
      }
      detail::fft(c, {cols}, -1);
      for (int k = n / 2; k < n / 2 + n; ++k) W[static_cast<std::size_t>(s) * cols + k] = scale * c[k];
    }
  } else {
    const double scale = root * gs.h();
    for (int i = 0; i < n; ++i) {
      std::fill(c.begin(), c.end(), cd{});
      for (int j = 0; j < n; ++j) c[wrap(i - j, cols)] = parity_sign(i - j) * f[i] * std::conj(g[j]);
      detail::fft(c, {cols}, -1);
      for (int k = 0; k < cols; ++k) W[static_cast<std::size_t>(2 * i) * cols + k] = scale * c[k];
    }
    interpolate_odd_rows(W, n);
  }
  return PhaseField(pg, std::move(W));
}

PhaseField transfer(const PhaseField& a, Quantization from, Quantization to) {
  if (from == to) return a;
  const GridSpec& g = base_of(a.grid());
  const int n = g.n();
  const int N = 2 * n;
  std::vector<cd> work = a.values();
  detail::fft(work, {N, N}, -1);
  // eta_p = 2 pi p / L dual to z, y_q = q h dual to xi; eta y = 2 pi p q / n.
  const double c = quantization_value(from) - quantization_value(to);
  for (int p = 0; p < N; ++p) {
    const int pc = p < n ? p : p - N;
    for (int q = 0; q < N; ++q) {
      const int qc = q < n ? q : q - N;
      const double phase = c * 2.0 * std::numbers::pi * static_cast<double>(pc) * qc / n;
      work[static_cast<std::size_t>(p) * N + q] *= std::polar(1.0, phase);
    }
  }
  detail::fft(work, {N, N}, +1);
  const double scale = 1.0 / (static_cast<double>(N) * N);
  for (cd& v : work) v *= scale;
  return PhaseField(a.grid(), std::move(work));
}

PhaseField sharp_product(const PhaseField& a, const PhaseField& b, Quantization A) {
  require_same_grid(a, b);
  const OperatorMatrix Ma = op_matrix(a, A);
  const OperatorMatrix Mb = op_matrix(b, A);
  return symbol_of(OperatorMatrix{Ma.grid, Ma.m * Mb.m}, A);
}

Eigen::MatrixXcd parity_matrix(int n) {
  Eigen::MatrixXcd P = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i) P(i, (n - i) % n) = 1.0;
  return P;
}

Eigen::MatrixXcd rank_one(const SampledField& f0, const SampledField& g) {
  require_same_grid(f0, g);
  const int n = static_cast<int>(f0.size());
  const double scale = f0.grid().h() / std::sqrt(2.0 * std::numbers::pi);
  Eigen::MatrixXcd R(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) R(i, j) = scale * f0[i] * std::conj(g[j]);
  return R;
}

}  // namespace tfa
