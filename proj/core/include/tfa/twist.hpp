#pragma once

#include <utility>

#include "tfa/amalgam.hpp"
#include "tfa/field.hpp"
#include "tfa/phase.hpp"

namespace tfa {

struct PhasePoint {
  double x = 0.0;
  double xi = 0.0;
};

// sigma(X, Y) = y xi - x eta
inline double sigma(const PhasePoint& X, const PhasePoint& Y) { return Y.x * X.xi - X.x * Y.xi; }

// Circular convolution h^d sum_j f(x_i - x_j) g(x_j).
SampledField convolve(const SampledField& f, const SampledField& g);

// Circular convolution on a centered phase grid, weighted by the cell area.
PhaseField convolve(const PhaseField& a, const PhaseField& b);

// (||f*g||_M, 2^d c_v ||f||_B ||g||_M); B carries the companion weight v.
std::pair<double, double> young_check(const SampledField& f, const SampledField& g, const AmalgamSpace& B,
                                      const AmalgamSpace& M);

// pi^{-1} sum_Y a(Y) e^{2 i sigma(X,Y)} dY on the input grid. Needs equal axis sizes and
// period(xi) * step(x) <= pi, period(x) * step(xi) <= pi.
PhaseField symplectic_ft(const PhaseField& a);
bool symplectic_compatible(const PhaseGrid& g);

// (2/pi)^{1/2} sum_Y a(X - Y) b(Y) e^{2 i sigma(X,Y)} dY with X - Y wrapped on the torus.
PhaseField twisted_convolve(const PhaseField& a, const PhaseField& b);

// (||a *_sigma b||_{WL^{p,q}_omega}, 4 (pi/2)^{1/2} c_v ||a||_{WL^{1,r}_v} ||b||_{WL^{p,q}_omega})
std::pair<double, double> twisted_young_check(const PhaseField& a, const PhaseField& b, double r, double p, double q,
                                              const Weight& omega, const Weight& v);

}  // namespace tfa
