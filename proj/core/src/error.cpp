#include "tfa/error.hpp"

namespace tfa {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::odd_side_length: return "OddSideLength";
    case ErrorCode::invalid_grid: return "InvalidGrid";
    case ErrorCode::grid_mismatch: return "GridMismatch";
    case ErrorCode::off_grid: return "OffGrid";
    case ErrorCode::zero_window: return "ZeroWindow";
    case ErrorCode::incompatible_axes: return "IncompatibleAxes";
    case ErrorCode::unsupported_quantization: return "UnsupportedQuantization";
    case ErrorCode::carrier_mismatch: return "CarrierMismatch";
    case ErrorCode::norm_exceeds_radius: return "NormExceedsRadius";
    case ErrorCode::resolution_limited: return "ResolutionLimited";
    case ErrorCode::near_singular: return "NearSingular";
    case ErrorCode::refinement_stall: return "RefinementStall";
    case ErrorCode::numerical: return "NumericalFailure";
    case ErrorCode::io: return "IoError";
    case ErrorCode::parse: return "ParseError";
  }
  return "Unknown";
}

bool is_numerical(ErrorCode code) {
  switch (code) {
    case ErrorCode::resolution_limited:
    case ErrorCode::near_singular:
    case ErrorCode::refinement_stall:
    case ErrorCode::numerical:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace tfa
