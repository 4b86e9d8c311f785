#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "tfa/error.hpp"
#include "tfa/random.hpp"
#include "tfa/twist.hpp"

using namespace tfa;
using oracle::pi;

namespace {

// N delta^2 = pi makes the symplectic transform an exact unitary involution on the grid
PhaseGrid involutive(int N) { return PhaseGrid::square(N, std::sqrt(pi / N)); }

BumpOptions tight() {
  BumpOptions o;
  o.center = 1.0;
  o.frequency = 1.0;
  return o;
}

}  // namespace

TEST(Sigma, Antisymmetric) {
  Rng rng(1);
  for (int t = 0; t < 100; ++t) {
    const PhasePoint X{rng.normal(), rng.normal()}, Y{rng.normal(), rng.normal()};
    EXPECT_EQ(sigma(X, Y), -sigma(Y, X));
  }
}

TEST(Convolve, Examples) {
  const GridSpec g = make_grid(1, 8, 8);
  const SampledField chi = indicator(g, 0.0, 1.0);
  const SampledField tri = convolve(chi, chi);
  // rectangle rule on half-open blocks: the apex 1 sits at x = 1 - h, and x = 1 reads 1 - h
  double apex = 0.0;
  for (const cd& z : tri.values()) apex = std::max(apex, z.real());
  EXPECT_NEAR(apex, 1.0, 1e-14);
  EXPECT_NEAR(tri.at(g.n() / 2 + 7).real(), 1.0, 1e-14);
  EXPECT_NEAR(tri.at(g.n() / 2 + 8).real(), 1.0 - g.h(), 1e-14);

  Rng rng(2);
  const SampledField f = random_field(g, rng);
  EXPECT_LT(oracle::max_abs_diff(convolve(discrete_delta(g), f).values(), f.values()), 1e-12);
  EXPECT_LT(oracle::max_abs_diff(convolve(f, chi).values(), oracle::circular_convolution(f, chi)), 1e-13);
  try {
    convolve(f, gaussian(make_grid(1, 4, 8)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::grid_mismatch);
  }
}

TEST(Convolve, Gaussians) {
  const GridSpec g = make_grid(1, 8, 16);
  const double s1 = 0.7, s2 = 1.1;
  const SampledField c = convolve(gaussian(g, s1), gaussian(g, s2));
  const double s = std::sqrt(s1 * s1 + s2 * s2);
  const double scale = std::sqrt(2 * pi) * s1 * s2 / s;
  for (int j = 0; j < g.n(); ++j) {
    const double x = g.coord(j);
    EXPECT_NEAR(std::abs(c.at(j) - scale * std::exp(-0.5 * x * x / (s * s))), 0.0, 1e-8);
  }
}

TEST(Convolve, Commutative) {
  Rng rng(3);
  for (int d = 1; d <= 2; ++d) {
    const GridSpec g = make_grid(d, 4, 8);
    const SampledField f = random_field(g, rng), h = random_field(g, rng);
    EXPECT_LT(oracle::max_abs_diff(convolve(f, h).values(), convolve(h, f).values()), 1e-13);
  }
}

TEST(Young, Examples) {
  const GridSpec g = make_grid(1, 4, 16);
  Rng rng(4);
  const auto B = AmalgamSpace::make(1.0, 0.5);
  const auto M = AmalgamSpace::make(2.0, 1.0);
  for (int t = 0; t < 20; ++t) {
    const auto [lhs, bound] = young_check(random_field(g, rng), random_field(g, rng), B, M);
    EXPECT_LE(lhs, bound);
  }
  const auto [z1, z2] = young_check(random_field(g, rng), SampledField::zeros(g), B, M);
  EXPECT_EQ(z1, 0.0);
  EXPECT_EQ(z2, 0.0);
  const SampledField f = random_field(g, rng);
  const auto [l, b] = young_check(discrete_delta(g), f, B, M);
  EXPECT_NEAR(l, amalgam_norm(f, M), 1e-12 * l);
  EXPECT_LE(l, b);
}

TEST(Symplectic, Involution) {
  Rng rng(5);
  const PhaseField a = random_smooth_symbol(involutive(16), rng, tight());
  EXPECT_LT(oracle::rel_l2_diff(symplectic_ft(symplectic_ft(a)), a), 1e-8);
  EXPECT_TRUE(symplectic_ft(PhaseField::zeros(a.grid())).is_zero());
}

TEST(Symplectic, Gaussian) {
  const PhaseGrid g = involutive(32);
  const PhaseField a = sample(g, [](double x, double xi) { return cd(std::exp(-(x * x + xi * xi))); });
  const PhaseField F = symplectic_ft(a);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(std::abs(F[i] - a[i]), 0.0, 1e-6);
}

TEST(Symplectic, Unitary) {
  Rng rng(6);
  for (int t = 0; t < 5; ++t) {
    const PhaseField a = random_phase_field(involutive(16), rng);
    EXPECT_NEAR(lp_norm(symplectic_ft(a), 2.0), lp_norm(a, 2.0), 1e-10 * lp_norm(a, 2.0));
  }
}

TEST(Symplectic, RejectsIncompatibleAxes) {
  try {
    symplectic_ft(PhaseField::zeros(PhaseGrid::square(16, 1.0)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::incompatible_axes);
  }
  EXPECT_FALSE(symplectic_compatible(PhaseGrid::stft(make_grid(1, 4, 8))));
  EXPECT_TRUE(symplectic_compatible(involutive(16)));
}

TEST(Twisted, MatchesDirectSum) {
  const PhaseGrid g = PhaseGrid::square(8, 0.5);
  Rng rng(7);
  const PhaseField a = random_phase_field(g, rng), b = random_phase_field(g, rng);
  const PhaseField c = twisted_convolve(a, b);
  const int n = 8;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      cd acc = 0.0;
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) {
          const int di = ((i - j + n / 2) % n + n) % n, dk = ((k - l + n / 2) % n + n) % n;
          const double s = g.x.coord(j) * g.xi.coord(k) - g.x.coord(i) * g.xi.coord(l);
          acc += a.at(di, dk) * b.at(j, l) * std::polar(1.0, 2 * s);
        }
      acc *= std::sqrt(2 / pi) * g.cell_area();
      EXPECT_NEAR(std::abs(c.at(i, k) - acc), 0.0, 1e-12);
    }
}

TEST(Twisted, PointwiseBound) {
  Rng rng(8);
  const PhaseGrid g = PhaseGrid::square(16, 0.5);
  for (int t = 0; t < 10; ++t) {
    const PhaseField a = random_phase_field(g, rng), b = random_phase_field(g, rng);
    const PhaseField lhs = twisted_convolve(a, b);
    const PhaseField rhs = convolve(abs(a), abs(b));
    for (std::size_t i = 0; i < lhs.size(); ++i) EXPECT_LE(std::abs(lhs[i]), std::sqrt(pi / 2) * rhs[i].real() + 1e-12);
  }
  EXPECT_TRUE(twisted_convolve(random_phase_field(g, rng), PhaseField::zeros(g)).is_zero());
}

TEST(Twisted, FourierIdentity) {
  // both readings that are consistent with the Weyl-product relation hold; the literal
  // "(F a) *_sigma a" does not, and is checked to differ
  Rng rng(9);
  for (int N : {16, 24}) {
    const PhaseGrid g = involutive(N);
    const PhaseField a = random_smooth_symbol(g, rng, tight()), b = random_smooth_symbol(g, rng, tight());
    const PhaseField lhs = symplectic_ft(twisted_convolve(a, b));
    EXPECT_LT(oracle::rel_l2_diff(twisted_convolve(symplectic_ft(a), b), lhs), 1e-6);
    EXPECT_LT(oracle::rel_l2_diff(twisted_convolve(reflect(a), symplectic_ft(b)), lhs), 1e-6);
    EXPECT_GT(oracle::rel_l2_diff(twisted_convolve(symplectic_ft(a), a), lhs), 1e-2);
  }
}

TEST(Twisted, NonCommutative) {
  Rng rng(10);
  const PhaseGrid g = PhaseGrid::square(16, 0.5);
  const PhaseField a = random_smooth_symbol(g, rng), b = random_smooth_symbol(g, rng);
  const double gap = lp_norm(twisted_convolve(a, b) - twisted_convolve(b, a), 2.0);
  RecordProperty("commutator_l2", std::to_string(gap));
  EXPECT_GT(gap, 0.0);
}

TEST(TwistedYoung, Examples) {
  Rng rng(11);
  const PhaseGrid g = PhaseGrid::square(16, 0.5);
  const Weight v = Weight::constant(2);
  for (int t = 0; t < 10; ++t) {
    const auto [lhs, bound] = twisted_young_check(random_phase_field(g, rng), random_phase_field(g, rng), 0.5, 2.0, 1.0, v, v);
    EXPECT_LE(lhs, bound);
  }
  const PhaseField b = random_phase_field(g, rng);
  const auto [z1, z2] = twisted_young_check(PhaseField::zeros(g), b, 0.5, 2.0, 1.0, v, v);
  EXPECT_EQ(z1, 0.0);
  EXPECT_EQ(z2, 0.0);
  const PhaseField a = random_phase_field(g, rng);
  const auto [l1, b1] = twisted_young_check(a, b, 0.5, 2.0, 1.0, v, v);
  const auto [l2, b2] = twisted_young_check(a, cd(0, -3) * b, 0.5, 2.0, 1.0, v, v);
  EXPECT_NEAR(l2, 3 * l1, 1e-12 * l2);
  EXPECT_NEAR(b2, 3 * b1, 1e-12 * b2);
}
