#pragma once

#include "tfa/field.hpp"
#include "tfa/phase.hpp"
#include "tfa/weight.hpp"

namespace tfa {

// L2-normalized e^{-(x-c)^2/(2w^2)} e^{i nu x} / (pi^{1/4} w^{1/2}); the default is the standard window.
SampledField gaussian_window(const GridSpec& grid, double width = 1.0, double center = 0.0, double frequency = 0.0);

// V_phi f(x_i, xi_k) = (2 pi)^{-1/2} h sum_j f(y_j) conj(phi(y_j - x_i)) e^{-i y_j xi_k}, periodic in y - x.
PhaseField stft(const SampledField& f, const SampledField& window);
// e^{i x xi} V_phi f
PhaseField tphi(const SampledField& f, const SampledField& window);

// Inner L^p over x, outer L^q over xi, omega(x, xi) applied first.
double mixed_norm(const PhaseField& F, double p, double q, const Weight& omega = Weight::constant(2));

enum class ModulationKind { M, W };

struct ModulationParams {
  double p = 2.0;
  double q = 2.0;
  Weight omega = Weight::constant(2);
  ModulationKind kind = ModulationKind::M;
};

double modulation_norm(const SampledField& f, const SampledField& window, const ModulationParams& params);
double modulation_norm_of(const PhaseField& V, const ModulationParams& params);

}  // namespace tfa
