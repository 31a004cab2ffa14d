#include "halfwell/cli/report.hpp"

#include <cmath>
#include <cstdio>

#include "halfwell/error.hpp"

namespace halfwell::cli {

namespace {

nlohmann::json optional_number(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

StateAnalysis analyse_state(const PotentialSpec& spec, const BoundState& state, double dx,
                            const TransformOptions& transform_opts,
                            const std::vector<double>& cutoffs, double window_lo,
                            double window_hi) {
  return analyse_state(assemble(spec, state, dx), transform_opts, cutoffs, window_lo, window_hi);
}

StateAnalysis analyse_state(const WaveFunction& wf, const TransformOptions& transform_opts,
                            const std::vector<double>& cutoffs, double window_lo,
                            double window_hi) {
  const PotentialSpec& spec = wf.spec;
  StateAnalysis a;
  a.wf = wf;
  a.md = transform(a.wf, transform_opts);
  a.norm_residual = norm_residual(a.wf);
  a.parseval = parseval(a.md);
  a.cross = cross_representation(a.wf, a.md);
  a.m4 = divergence_verdict(a.md, 4, cutoffs);
  a.m6 = divergence_verdict(a.md, 6, cutoffs);
  a.window_lo = window_lo;
  a.window_hi = window_hi;
  try {
    a.tail = tail_exponent(a.md, window_lo, window_hi);
  } catch (const DomainError& e) {
    a.tail_error = e.what();
  }
  a.ehrenfest = ehrenfest(a.wf, spec);
  a.nodes = node_count(a.wf);
  return a;
}

nlohmann::json params_json(const PotentialSpec& spec) {
  nlohmann::json p{{"v0", spec.v0}, {"a", spec.a}};
  if (spec.kind == WellKind::DeltaWell) p["lambda"] = spec.lambda;
  return p;
}

nlohmann::json solve_json(const PotentialSpec& spec, const std::vector<BoundState>& states,
                          const std::vector<int>& nodes) {
  nlohmann::json list = nlohmann::json::array();
  for (std::size_t i = 0; i < states.size(); ++i) {
    const BoundState& s = states[i];
    list.push_back({{"n", s.n},
                    {"E", s.energy},
                    {"k", s.k},
                    {"residual", s.residual},
                    {"nodes", nodes.at(i)}});
  }
  return {{"model", model_name(spec.kind)}, {"params", params_json(spec)}, {"states", list}};
}

nlohmann::json analysis_json(const StateAnalysis& a) {
  nlohmann::json partials = nlohmann::json::array();
  for (std::size_t i = 0; i < a.m6.cutoffs.size(); ++i)
    partials.push_back({{"P", a.m6.cutoffs[i]}, {"value", a.m6.partials[i]}});

  nlohmann::json tail{{"window", {a.window_lo, a.window_hi}}};
  if (a.tail) {
    tail["slope"] = a.tail->slope;
    tail["r2"] = a.tail->r2;
    tail["c6"] = a.tail->plateau_c6;
  } else {
    tail["slope"] = nullptr;
    tail["r2"] = nullptr;
    tail["c6"] = nullptr;
    tail["error"] = a.tail_error;
  }

  nlohmann::json eh{{"interior", a.ehrenfest.interior},
                    {"boundary", a.ehrenfest.boundary},
                    {"relative", a.ehrenfest.relative}};
  if (a.ehrenfest.exact_by_symmetry) eh["exact_by_symmetry"] = true;
  if (a.ehrenfest.endpoint_gap) eh["endpoint_gap"] = *a.ehrenfest.endpoint_gap;

  const PotentialSpec& spec = a.wf.spec;
  return {{"model", model_name(spec.kind)},
          {"params", params_json(spec)},
          {"state_index", a.wf.state.n},
          {"E", a.wf.state.energy},
          {"p2_position", a.cross.p2_position},
          {"p2_momentum", a.cross.p2_momentum},
          {"p4_position", optional_number(a.cross.p4_position)},
          {"p4_momentum_corrected", optional_number(a.cross.p4_momentum_corrected)},
          {"m6_partials", partials},
          {"growth_ratio", a.m6.growth_ratio},
          {"verdict", verdict_name(a.m6.verdict)},
          {"tail", tail},
          {"ehrenfest", eh}};
}

std::vector<VerifyCheck> verify_checks(const StateAnalysis& a) {
  std::vector<VerifyCheck> checks;
  auto add = [&checks](std::string key, double value, double tol) {
    checks.push_back({std::move(key), value, tol, std::abs(value) < tol});
  };
  add("norm", a.norm_residual, kNormTolerance);
  add("parseval", a.parseval.residual, kParsevalTolerance);
  if (a.ehrenfest.endpoint_gap)
    add("ehrenfest", *a.ehrenfest.endpoint_gap, kEndpointGapTolerance);
  else if (!a.ehrenfest.exact_by_symmetry)
    add("ehrenfest", a.ehrenfest.relative, kEhrenfestTolerance);
  add("p2_cross", a.cross.p2_relative, kP2Tolerance);
  if (a.cross.p4_relative) add("p4_cross", *a.cross.p4_relative, kP4Tolerance);
  add("odd_p1", a.cross.p1, kOddMomentTolerance);
  add("odd_p3", a.cross.p3, kOddMomentTolerance);
  checks.push_back({"node_law", static_cast<double>(a.nodes - a.wf.state.n), 0.5,
                    a.nodes == a.wf.state.n});
  return checks;
}

void write_csv(const MomentumDistribution& md, std::ostream& out) {
  out << "p,re_phi,im_phi,I,p2I,p4I,p6I\n";
  const auto rows = weighted_curves(md);
  char line[256];
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::snprintf(line, sizeof line, "%.12e,%.12e,%.12e,%.12e,%.12e,%.12e,%.12e\n", rows[i].p,
                  md.phi[i].real(), md.phi[i].imag(), md.intensity[i], rows[i].p2I, rows[i].p4I,
                  rows[i].p6I);
    out << line;
  }
}

nlohmann::json momdist_json(const MomentumDistribution& md) {
  nlohmann::json rows = nlohmann::json::array();
  const auto curves = weighted_curves(md);
  for (std::size_t i = 0; i < curves.size(); ++i)
    rows.push_back({{"p", curves[i].p},
                    {"re_phi", md.phi[i].real()},
                    {"im_phi", md.phi[i].imag()},
                    {"I", md.intensity[i]},
                    {"p2I", curves[i].p2I},
                    {"p4I", curves[i].p4I},
                    {"p6I", curves[i].p6I}});
  return rows;
}

}  // namespace halfwell::cli
