#pragma once

#include <cstdint>
#include <random>

#include "tfa/field.hpp"
#include "tfa/phase.hpp"

namespace tfa {

// mt19937_64 with hand-rolled uniform and normal draws; the standard distributions are
// implementation-defined, these are not.
class Rng {
 public:
  static constexpr const char* kName = "mt19937_64";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform();  // [0, 1)
  double uniform(double a, double b) { return a + (b - a) * uniform(); }
  double normal();
  cd complex_normal() { return {normal(), normal()}; }
  int integer(int lo, int hi);  // inclusive

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// i.i.d. complex normal samples times a Gaussian envelope of the given width
SampledField random_field(const GridSpec& grid, Rng& rng, double envelope = 4.0);

// A few modulated Gaussian bumps with random centres, widths and phases.
struct BumpOptions {
  int bumps = 3;
  double center = 1.5;      // |centre| bound in each coordinate
  double width_min = 0.4;
  double width_max = 1.0;
  double frequency = 2.0;   // |modulation| bound
};

SampledField random_smooth_field(const GridSpec& grid, Rng& rng, const BumpOptions& opt = {});
PhaseField random_smooth_symbol(const PhaseGrid& grid, Rng& rng, const BumpOptions& opt = {});
// i.i.d. complex normal entries with a phase-space Gaussian envelope
PhaseField random_phase_field(const PhaseGrid& grid, Rng& rng, double envelope = 2.0);

}  // namespace tfa
