#pragma once

#include <span>
#include <utility>
#include <vector>

#include "tfa/field.hpp"
#include "tfa/norms.hpp"
#include "tfa/phase.hpp"
#include "tfa/weight.hpp"

namespace tfa {

// WL^{p,q}_(omega): local L^p over unit cubes k + [0,1)^d, weighted l^q over the corners k.
struct AmalgamSpace {
  QuasiNormParams params;
  Weight weight;

  static AmalgamSpace make(double p, double q, Weight w = Weight{}) { return {{p, q}, std::move(w)}; }
};

// Samples are binned into cubes by the floor of their coordinates, so the same routine
// serves space grids, frequency grids and phase grids.
double amalgam_norm(const SampledField& f, const AmalgamSpace& space);
double amalgam_norm(const PhaseField& a, const AmalgamSpace& space);

// Local norms a_f(k) in lexicographic cube order, with the cube corners.
struct CubeNorms {
  std::vector<Point> corners;
  std::vector<double> local;
};
CubeNorms cube_norms(const SampledField& f, double p);
CubeNorms cube_norms(const PhaseField& a, double p);

// (amalgam norm with q = p and omega at cube corners, L^p norm with the cube-constant weight)
std::pair<double, double> amalgam_equals_lebesgue_check(const SampledField& f, double p, const Weight& w);

// (L^1 norm, WL^{1,r} norm) of sum_{j<J} t_j chi_{j+[0,1)}, evaluated on the block sequence.
std::pair<double, double> strictness_witness(std::span<const double> t, std::size_t J, double r);

// Unit-mass sampled Gaussian of width eps, normalized so that h^d sum = 1.
SampledField gaussian_mollifier(const GridSpec& grid, double eps);

// Default ladder 64h, 32h, ..., 4h.
std::vector<double> linfty_ladder(const GridSpec& grid);

// ||f - f * phi_eps||_inf for each eps; f is typically chi_[0,1).
std::vector<double> linfty_failure_witness(const SampledField& f, std::span<const double> eps);

}  // namespace tfa
