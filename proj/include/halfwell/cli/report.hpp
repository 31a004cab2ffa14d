#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "halfwell/analysis.hpp"
#include "halfwell/eigensolver.hpp"
#include "halfwell/momentum.hpp"
#include "halfwell/wavefun.hpp"

namespace halfwell::cli {

inline constexpr double kNormTolerance = 1e-9;
inline constexpr double kParsevalTolerance = 1e-4;
inline constexpr double kEhrenfestTolerance = 1e-3;
inline constexpr double kEndpointGapTolerance = 1e-8;
inline constexpr double kP2Tolerance = 1e-3;
inline constexpr double kP4Tolerance = 2e-2;
inline constexpr double kOddMomentTolerance = 1e-10;

/// Everything the reporting commands derive from one eigenstate.
struct StateAnalysis {
  WaveFunction wf;
  MomentumDistribution md;
  double norm_residual = 0.0;
  ParsevalCheck parseval;
  CrossRepresentation cross;
  DivergenceReport m4;
  DivergenceReport m6;
  std::optional<TailFit> tail;
  std::string tail_error;  // set when the window hit the quadrature floor
  double window_lo = 0.0;
  double window_hi = 0.0;
  EhrenfestReport ehrenfest;
  int nodes = 0;
};

StateAnalysis analyse_state(const WaveFunction& wf, const TransformOptions& transform_opts,
                            const std::vector<double>& cutoffs, double window_lo,
                            double window_hi);
StateAnalysis analyse_state(const PotentialSpec& spec, const BoundState& state, double dx,
                            const TransformOptions& transform_opts,
                            const std::vector<double>& cutoffs, double window_lo,
                            double window_hi);

nlohmann::json params_json(const PotentialSpec& spec);

/// {model, params, states:[{n, E, k, residual, nodes}]}
nlohmann::json solve_json(const PotentialSpec& spec, const std::vector<BoundState>& states,
                          const std::vector<int>& nodes);

/// The analysis report schema shared by moments, tail and verify.
nlohmann::json analysis_json(const StateAnalysis& a);

struct VerifyCheck {
  std::string key;
  double value = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

/// norm, parseval, ehrenfest, p2_cross, p4_cross, odd moments and node law.
std::vector<VerifyCheck> verify_checks(const StateAnalysis& a);

/// p,re_phi,im_phi,I,p2I,p4I,p6I with every float printed as %.12e.
void write_csv(const MomentumDistribution& md, std::ostream& out);

/// Same columns as write_csv, as an array of objects.
nlohmann::json momdist_json(const MomentumDistribution& md);

}  // namespace halfwell::cli
