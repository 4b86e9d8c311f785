#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "tfa/field.hpp"
#include "tfa/phase.hpp"
#include "tfa/weyl.hpp"

namespace tfa::io {

namespace fs = std::filesystem;

// Grid metadata lives next to the CSV in "<path>.json".
fs::path sidecar_path(const fs::path& csv);

// %.17g, so that text round-trips are bit-exact
std::string format_double(double x);

void write_field(const fs::path& path, const SampledField& f);
SampledField read_field(const fs::path& path);

void write_phase_field(const fs::path& path, const PhaseField& a);
PhaseField read_phase_field(const fs::path& path);

void write_operator(const fs::path& path, const OperatorMatrix& M);
void write_spectrum(const fs::path& path, const std::vector<double>& sigma);

// Parses one CSV line of numbers; throws ErrorCode::parse on malformed input.
std::vector<double> parse_numbers(const std::string& line, std::size_t expected);

}  // namespace tfa::io
