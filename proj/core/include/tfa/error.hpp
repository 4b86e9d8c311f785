#pragma once

#include <stdexcept>
#include <string>

namespace tfa {

enum class ErrorCode {
  invalid_argument,
  odd_side_length,
  invalid_grid,
  grid_mismatch,
  off_grid,
  zero_window,
  incompatible_axes,
  unsupported_quantization,
  carrier_mismatch,
  norm_exceeds_radius,
  resolution_limited,
  near_singular,
  refinement_stall,
  numerical,
  io,
  parse,
};

const char* to_string(ErrorCode code);

// Numerical conditions (as opposed to bad input) map to a different CLI exit code.
bool is_numerical(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tfa
