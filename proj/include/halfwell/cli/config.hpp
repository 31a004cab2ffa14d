#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "halfwell/analysis.hpp"
#include "halfwell/momentum.hpp"

namespace halfwell::cli {

/// Bad flags, bad config file or an invalid well: exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string model = "half-parabolic";
  double v0 = 15.0;
  double a = 2.0;
  double lambda = 2.0;
  int state = 0;
  double p_max = 200.0;
  double dp = 0.0;  // 0: default_dp(k)
  double dx = 0.0;  // 0: default_dx(spec)
  std::vector<double> cutoffs = kDefaultCutoffs;
  double window_lo = kDefaultTailLo;
  double window_hi = kDefaultTailHi;
  std::string out;        // primary output file, stdout when empty
  std::string json_path;  // machine-readable copy

  /// Throws UsageError for an unknown model or out-of-range parameters.
  PotentialSpec spec() const;
  TransformOptions transform_options() const;
};

/// Overlay the keys of a JSON object onto cfg. Accepted keys match the long
/// flag names: model, v0, a, lambda, state, pmax, dp, dx, cutoffs (array),
/// window ("lo:hi" or [lo, hi]), out, json.
void apply_json(RunConfig& cfg, const std::string& json_text);
void apply_config_file(RunConfig& cfg, const std::filesystem::path& path);

/// "40:150" -> {40, 150}.
std::pair<double, double> parse_window(const std::string& text);
/// "40,80,120,160" -> {40, 80, 120, 160}.
std::vector<double> parse_cutoffs(const std::string& text);

}  // namespace halfwell::cli
