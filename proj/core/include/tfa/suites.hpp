#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tfa {

struct SuiteRow {
  std::string suite;
  int trial = 0;
  std::string label;
  double lhs = 0.0;
  double bound = 0.0;
  double margin = 0.0;  // >= 0 when the row passes
  bool pass = false;
};

struct SuiteConfig {
  std::uint64_t seed = 1;
  int trials = -1;  // -1: suite default; deterministic suites emit nothing for 0
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
int default_trials(const std::string& name);

// Throws ErrorCode::invalid_argument for an unknown suite.
std::vector<SuiteRow> run_suite(const std::string& name, const SuiteConfig& cfg);

// Independent generator seed for one trial of a seeded run.
std::uint64_t trial_seed(std::uint64_t seed, int trial);

// 64-bit FNV-1a
std::uint64_t fnv1a(const std::string& text);
std::string hex64(std::uint64_t x);

// "# key: value" header lines followed by the CSV table.
std::string format_suite_report(const std::vector<SuiteRow>& rows, const std::string& config_text,
                                std::uint64_t seed);

}  // namespace tfa
