#pragma once

#include "tfa/field.hpp"

namespace tfa {

SampledField fourier(const SampledField& f);
SampledField inverse_fourier(const SampledField& f);

}  // namespace tfa
