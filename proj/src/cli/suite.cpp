#include "halfwell/cli/suite.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>

#include "halfwell/cli/report.hpp"
#include "halfwell/engine.hpp"
#include "halfwell/error.hpp"

namespace halfwell::cli {

namespace {

constexpr double kEnergyTolerance = 2e-3;
constexpr double kDeltaPhiTolerance = 1e-6;
constexpr double kDeltaP2Tolerance = 1e-4;
constexpr double kRichardsonFactor = 10.0;
constexpr double kFaultScale = 50.0;

// Study parameters V0 = 15, a = 2 (lambda = 2 puts the delta state at E = -1).
const std::map<WellKind, std::vector<double>>& reference_energies() {
  static const std::map<WellKind, std::vector<double>> table{
      {WellKind::HalfParabolic, {-10.6370, -3.9894}},
      {WellKind::HalfTriangular, {-8.1408, -1.8025}},
      {WellKind::HalfEckart, {-10.9628, -5.8470, -2.2641, -0.3400}},
      {WellKind::HalfExponential, {-3.9249}},
  };
  return table;
}

const std::vector<WellKind>& jump_wells() {
  static const std::vector<WellKind> kinds{WellKind::HalfParabolic, WellKind::HalfTriangular,
                                           WellKind::HalfEckart, WellKind::HalfExponential,
                                           WellKind::FiniteSquareWell};
  return kinds;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

struct ModelRun {
  PotentialSpec spec;
  double dx = 0.0;
  std::vector<BoundState> states;
  std::string solve_error;
  std::vector<std::optional<StateAnalysis>> analyses;
  std::vector<std::string> analysis_errors;
  // Position-space results survive a failed momentum transform.
  std::vector<std::optional<WaveFunction>> wavefunctions;
  std::vector<std::string> wavefunction_errors;

  std::string name() const { return std::string(model_name(spec.kind)); }
};

double base_dx(const PotentialSpec& spec, const SuiteOptions& opts) {
  const double dx = opts.dx > 0.0 ? opts.dx : default_dx(spec);
  return dx * opts.dx_scale;
}

ModelRun run_model(WellKind kind, const SuiteOptions& opts) {
  ModelRun run;
  run.spec.kind = kind;
  run.dx = base_dx(run.spec, opts);
  try {
    SolveOptions so;
    so.dx = run.dx;
    run.states = solve_all(run.spec, so);
  } catch (const std::exception& e) {
    run.solve_error = run.name() + ": solve failed: " + e.what();
    return run;
  }
  for (const BoundState& s : run.states) {
    const std::string label = run.name() + " n=" + std::to_string(s.n) + ": ";
    run.wavefunctions.emplace_back(std::nullopt);
    run.wavefunction_errors.emplace_back();
    run.analyses.emplace_back(std::nullopt);
    run.analysis_errors.emplace_back();
    try {
      run.wavefunctions.back() = assemble(run.spec, s, run.dx);
    } catch (const std::exception& e) {
      run.wavefunction_errors.back() = label + e.what();
      run.analysis_errors.back() = label + e.what();
      continue;
    }
    try {
      run.analyses.back() = analyse_state(*run.wavefunctions.back(), {}, kDefaultCutoffs,
                                          kDefaultTailLo, kDefaultTailHi);
    } catch (const std::exception& e) {
      run.analysis_errors.back() = label + e.what();
    }
  }
  return run;
}

void add(Criterion& c, std::string label, double value, std::string expect, bool passed) {
  c.checks.push_back({std::move(label), value, std::move(expect), passed});
}

const WaveFunction* need_wf(Criterion& c, const ModelRun& run, std::size_t i) {
  if (!run.solve_error.empty()) {
    c.errors.push_back(run.solve_error);
    return nullptr;
  }
  if (!run.wavefunctions[i]) {
    c.errors.push_back(run.wavefunction_errors[i]);
    return nullptr;
  }
  return &*run.wavefunctions[i];
}

// Records a missing analysis as an error; returns it otherwise.
const StateAnalysis* need(Criterion& c, const ModelRun& run, std::size_t i) {
  if (!run.solve_error.empty()) {
    c.errors.push_back(run.solve_error);
    return nullptr;
  }
  if (i >= run.analyses.size()) {
    c.errors.push_back(run.name() + ": state " + std::to_string(i) + " missing");
    return nullptr;
  }
  if (!run.analyses[i]) {
    c.errors.push_back(run.analysis_errors[i]);
    return nullptr;
  }
  return &*run.analyses[i];
}

Criterion eigenvalues(const std::map<WellKind, ModelRun>& runs) {
  Criterion c{1, "eigenvalues match reference values within 2e-3", {}, {}};
  for (const auto& [kind, energies] : reference_energies()) {
    const ModelRun& run = runs.at(kind);
    if (!run.solve_error.empty()) {
      c.errors.push_back(run.solve_error);
      continue;
    }
    for (std::size_t i = 0; i < energies.size(); ++i) {
      const std::string label = run.name() + " E" + std::to_string(i);
      if (i >= run.states.size()) {
        c.errors.push_back(label + " missing");
        continue;
      }
      const double err = std::abs(run.states[i].energy - energies[i]);
      add(c, label, run.states[i].energy, fmt(energies[i]) + " +- 2e-3", err < kEnergyTolerance);
    }
  }
  return c;
}

Criterion state_counts(const std::map<WellKind, ModelRun>& runs) {
  Criterion c{2, "half-well state counts are 2/2/4/1", {}, {}};
  for (const auto& [kind, energies] : reference_energies()) {
    const ModelRun& run = runs.at(kind);
    if (!run.solve_error.empty()) {
      c.errors.push_back(run.solve_error);
      continue;
    }
    const auto count = static_cast<double>(run.states.size());
    add(c, run.name() + " count", count, "== " + std::to_string(energies.size()),
        run.states.size() == energies.size());
  }
  return c;
}

Criterion delta_oracle(const std::map<WellKind, ModelRun>& runs) {
  Criterion c{3, "delta well phi(p) and <p^2> against closed form", {}, {}};
  const ModelRun& run = runs.at(WellKind::DeltaWell);
  const StateAnalysis* a = need(c, run, 0);
  if (!a) return c;
  const MomentumDistribution& md = a->md;
  for (double p : {0.0, 1.0, 5.0, 10.0, 50.0}) {
    const auto i = md.zero_index() + static_cast<std::size_t>(std::llround(p / md.dp));
    if (i >= md.p.size() || std::abs(md.p[i] - p) > 1e-9) {
      c.errors.push_back("delta: p = " + fmt(p) + " not on the momentum grid");
      continue;
    }
    const double exact = std::sqrt(2.0 / std::numbers::pi) / (1.0 + p * p);
    const double err = std::abs(md.phi[i] - exact);
    add(c, "phi(" + fmt(p) + ") error", err, "< 1e-6", err < kDeltaPhiTolerance);
  }
  const double xp = a->cross.p2_position;
  const double pp = a->cross.p2_momentum;
  add(c, "<p^2> position", xp, "1 +- 1e-4", std::abs(xp - 1.0) < kDeltaP2Tolerance);
  add(c, "<p^2> momentum", pp, "1 +- 1e-4", std::abs(pp - 1.0) < kDeltaP2Tolerance);
  return c;
}

Criterion tail_exponents(const std::map<WellKind, ModelRun>& runs) {
  Criterion c{4, "ground-state tail exponents", {}, {}};
  auto fitted = [&c](const ModelRun& run, double target, double tol) {
    const StateAnalysis* a = need(c, run, 0);
    if (!a) return;
    if (!a->tail) {
      c.errors.push_back(run.name() + ": " + a->tail_error);
      return;
    }
    add(c, run.name() + " slope [40,150]", a->tail->slope, fmt(target) + " +- " + fmt(tol),
        std::abs(a->tail->slope - target) < tol);
  };
  for (WellKind kind : jump_wells()) fitted(runs.at(kind), -6.0, 0.3);
  fitted(runs.at(WellKind::DeltaWell), -4.0, 0.05);

  const ModelRun& smooth = runs.at(WellKind::FullEckart);
  if (const StateAnalysis* a = need(c, smooth, 0)) {
    try {
      const TailFit fit = tail_exponent(a->md, 20.0, 60.0);
      add(c, smooth.name() + " slope [20,60]", fit.slope, "< -12", fit.slope < -12.0);
    } catch (const std::exception& e) {
      c.errors.push_back(smooth.name() + ": " + e.what());
    }
  }
  return c;
}

Criterion verdicts(const std::map<WellKind, ModelRun>& runs) {
  Criterion c{5, "moment divergence verdicts", {}, {}};
  auto expect = [&c](const ModelRun& run, const DivergenceReport& r, Verdict want) {
    const std::string bound = want == Verdict::Divergent ? "> 0.5 (Divergent)" : "< 0.2 (Convergent)";
    add(c, run.name() + " order " + std::to_string(r.order) + " ratio", r.growth_ratio, bound,
        r.verdict == want);
  };
  for (WellKind kind : jump_wells()) {
    const ModelRun& run = runs.at(kind);
    if (const StateAnalysis* a = need(c, run, 0)) {
      expect(run, a->m6, Verdict::Divergent);
      expect(run, a->m4, Verdict::Convergent);
    }
  }
  const ModelRun& delta = runs.at(WellKind::DeltaWell);
  if (const StateAnalysis* a = need(c, delta, 0)) expect(delta, a->m4, Verdict::Divergent);
  const ModelRun& smooth = runs.at(WellKind::FullEckart);
  if (const StateAnalysis* a = need(c, smooth, 0)) expect(smooth, a->m6, Verdict::Convergent);
  return c;
}

Criterion cross_moments(const std::map<WellKind, ModelRun>& runs) {
  Criterion c{6, "ground-state <p^2> and <p^4> agree across representations", {}, {}};
  for (const auto& [kind, run] : runs) {
    const StateAnalysis* a = need(c, run, 0);
    if (!a) continue;
    add(c, run.name() + " <p^2> rel", a->cross.p2_relative, "< 1e-3",
        a->cross.p2_relative < kP2Tolerance);
    if (a->cross.p4_relative)
      add(c, run.name() + " <p^4> rel", *a->cross.p4_relative, "< 2e-2",
          *a->cross.p4_relative < kP4Tolerance);
  }
  return c;
}

Criterion ehrenfest_checks(const std::map<WellKind, ModelRun>& runs) {
  Criterion c{7, "Ehrenfest balance for half-well and square-well states", {}, {}};
  for (const auto& [kind, run] : runs) {
    if (!is_half_well(kind) && kind != WellKind::FiniteSquareWell) continue;
    if (!run.solve_error.empty()) {
      c.errors.push_back(run.solve_error);
      continue;
    }
    for (std::size_t i = 0; i < run.states.size(); ++i) {
      const WaveFunction* wf = need_wf(c, run, i);
      if (!wf) continue;
      const EhrenfestReport eh = ehrenfest(*wf, run.spec);
      const std::string label = run.name() + " n=" + std::to_string(i);
      if (eh.endpoint_gap)
        add(c, label + " |psi(0)^2-psi(a)^2|", *eh.endpoint_gap, "< 1e-8",
            *eh.endpoint_gap < kEndpointGapTolerance);
      else
        add(c, label + " relative", eh.relative, "< 1e-3", eh.relative < kEhrenfestTolerance);
    }
  }
  return c;
}

Criterion normalisation(const std::map<WellKind, ModelRun>& runs) {
  Criterion c{8, "position norm and Parseval for every state", {}, {}};
  for (const auto& [kind, run] : runs) {
    if (!run.solve_error.empty()) {
      c.errors.push_back(run.solve_error);
      continue;
    }
    for (std::size_t i = 0; i < run.states.size(); ++i) {
      const WaveFunction* wf = need_wf(c, run, i);
      if (!wf) continue;
      const std::string label = run.name() + " n=" + std::to_string(i);
      const double norm = norm_residual(*wf);
      add(c, label + " norm", norm, "< 1e-9", norm < kNormTolerance);
      const StateAnalysis* a = need(c, run, i);
      if (!a) continue;
      add(c, label + " Parseval", a->parseval.residual, "< 1e-4",
          a->parseval.residual < kParsevalTolerance);
    }
  }
  return c;
}

Criterion richardson(const std::map<WellKind, ModelRun>& runs) {
  Criterion c{9, "fourth-order convergence of every eigenvalue", {}, {}};
  for (const auto& [kind, run] : runs) {
    if (kind == WellKind::DeltaWell) continue;  // closed form, no grid
    std::vector<std::vector<BoundState>> levels;
    try {
      for (double f : {10.0, 20.0, 40.0}) {
        SolveOptions so;
        so.dx = f * run.dx;
        levels.push_back(solve_all(run.spec, so));
      }
    } catch (const std::exception& e) {
      c.errors.push_back(run.name() + ": coarse solve failed: " + e.what());
      continue;
    }
    const std::size_t n = levels[0].size();
    if (levels[1].size() != n || levels[2].size() != n) {
      c.errors.push_back(run.name() + ": state count changes under refinement");
      continue;
    }
    for (std::size_t i = 0; i < n; ++i) {
      const double fine = std::abs(levels[1][i].energy - levels[0][i].energy);
      const double coarse = std::abs(levels[2][i].energy - levels[1][i].energy);
      const double ratio = fine > 0.0 ? coarse / fine : std::numeric_limits<double>::infinity();
      add(c, run.name() + " n=" + std::to_string(i) + " ratio", ratio, ">= 10",
          ratio >= kRichardsonFactor);
    }
  }
  return c;
}

Criterion fault_sensitivity(const SuiteOptions& opts) {
  Criterion c{10, "suite fails with a 50x coarser x step", {}, {}};
  SuiteOptions coarse = opts;
  coarse.dx_scale *= kFaultScale;
  coarse.fault_check = false;
  const SuiteResult nested = run_suite(coarse);
  std::string ids;
  for (int id : nested.failed_ids()) ids += (ids.empty() ? "" : ",") + std::to_string(id);
  add(c, "failing criteria at 50x dx: {" + ids + "}", static_cast<double>(nested.failed_ids().size()),
      ">= 1", !nested.passed());
  return c;
}

}  // namespace

bool Criterion::passed() const {
  if (!errors.empty() || checks.empty()) return false;
  for (const SuiteCheck& k : checks)
    if (!k.passed) return false;
  return true;
}

bool SuiteResult::passed() const { return failed_ids().empty(); }

std::vector<int> SuiteResult::failed_ids() const {
  std::vector<int> ids;
  for (const Criterion& c : criteria)
    if (!c.passed()) ids.push_back(c.id);
  return ids;
}

SuiteResult run_suite(const SuiteOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  std::map<WellKind, ModelRun> runs;
  for (WellKind kind : all_kinds()) runs.emplace(kind, run_model(kind, opts));

  SuiteResult r;
  r.criteria.push_back(eigenvalues(runs));
  r.criteria.push_back(state_counts(runs));
  r.criteria.push_back(delta_oracle(runs));
  r.criteria.push_back(tail_exponents(runs));
  r.criteria.push_back(verdicts(runs));
  r.criteria.push_back(cross_moments(runs));
  r.criteria.push_back(ehrenfest_checks(runs));
  r.criteria.push_back(normalisation(runs));
  r.criteria.push_back(richardson(runs));
  if (opts.fault_check) r.criteria.push_back(fault_sensitivity(opts));
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

void print_table(const SuiteResult& r, std::ostream& out) {
  char line[512];
  for (const Criterion& c : r.criteria) {
    std::size_t ok = 0;
    for (const SuiteCheck& k : c.checks) ok += k.passed ? 1 : 0;
    std::snprintf(line, sizeof line, "%2d  %-4s  %3zu/%-3zu  %s\n", c.id, c.passed() ? "PASS" : "FAIL",
                  ok, c.checks.size(), c.title.c_str());
    out << line;
    for (const SuiteCheck& k : c.checks) {
      if (k.passed) continue;
      std::snprintf(line, sizeof line, "      fail: %s = %.6g (want %s)\n", k.label.c_str(), k.value,
                    k.expect.c_str());
      out << line;
    }
    for (const std::string& e : c.errors) out << "      error: " << e << '\n';
  }
  std::snprintf(line, sizeof line, "%s (%.1f s)\n", r.passed() ? "ALL PASS" : "FAILURES", r.seconds);
  out << line;
}

nlohmann::json suite_json(const SuiteResult& r) {
  nlohmann::json list = nlohmann::json::array();
  for (const Criterion& c : r.criteria) {
    nlohmann::json checks = nlohmann::json::array();
    for (const SuiteCheck& k : c.checks)
      checks.push_back({{"label", k.label}, {"value", k.value}, {"expect", k.expect}, {"passed", k.passed}});
    list.push_back({{"id", c.id},
                    {"title", c.title},
                    {"passed", c.passed()},
                    {"checks", checks},
                    {"errors", c.errors}});
  }
  return {{"passed", r.passed()}, {"failed", r.failed_ids()}, {"criteria", list}};
}

}  // namespace halfwell::cli
