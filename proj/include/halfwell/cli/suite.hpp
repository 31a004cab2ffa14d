#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace halfwell::cli {

struct SuiteCheck {
  std::string label;
  double value = 0.0;
  std::string expect;  // human-readable bound, e.g. "< 1e-4"
  bool passed = false;
};

struct Criterion {
  int id = 0;
  std::string title;
  std::vector<SuiteCheck> checks;
  std::vector<std::string> errors;  // pipeline failures count against the criterion
  bool passed() const;
};

struct SuiteOptions {
  /// Absolute x step for every model; 0 keeps each model's default.
  double dx = 0.0;
  /// Multiplier on the step above (or on the defaults).
  double dx_scale = 1.0;
  /// Run criterion 10, which repeats the suite with the step 50x coarser.
  bool fault_check = true;
};

struct SuiteResult {
  std::vector<Criterion> criteria;
  double seconds = 0.0;
  bool passed() const;
  std::vector<int> failed_ids() const;
};

SuiteResult run_suite(const SuiteOptions& opts = {});

void print_table(const SuiteResult& r, std::ostream& out);
nlohmann::json suite_json(const SuiteResult& r);

}  // namespace halfwell::cli
