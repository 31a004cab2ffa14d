#include "halfwell/cli/commands.hpp"

#include <fstream>
#include <functional>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "halfwell/cli/config.hpp"
#include "halfwell/cli/report.hpp"
#include "halfwell/cli/suite.hpp"
#include "halfwell/error.hpp"

namespace halfwell::cli {

namespace {

constexpr double kMomdistParsevalLimit = 10.0 * kParsevalTolerance;

// Flags land in `flags`; after parsing, the ones actually given are copied
// over the config file values.
struct FlagSet {
  RunConfig flags;
  std::string cutoffs;
  std::string window;
  std::string config_path;
  std::vector<std::pair<CLI::Option*, std::function<void(RunConfig&)>>> bindings;

  template <typename T>
  void bind(CLI::App& app, const std::string& name, T RunConfig::*field, const std::string& help) {
    CLI::Option* opt = app.add_option(name, flags.*field, help);
    bindings.emplace_back(opt, [this, field](RunConfig& c) { c.*field = flags.*field; });
  }

  RunConfig resolve() const {
    RunConfig cfg;
    if (!config_path.empty()) apply_config_file(cfg, config_path);
    for (const auto& [opt, copy] : bindings)
      if (opt->count() > 0) copy(cfg);
    return cfg;
  }
};

void add_output_flags(CLI::App& app, FlagSet& fs) {
  fs.bind(app, "--out", &RunConfig::out, "Write the primary output to this file");
  fs.bind(app, "--json", &RunConfig::json_path, "Write a JSON copy of the output to this file");
  app.add_option("--config", fs.config_path, "JSON config file; flags override its values");
}

void add_model_flags(CLI::App& app, FlagSet& fs) {
  fs.bind(app, "--model", &RunConfig::model, "Well: half-parabolic, half-triangular, half-eckart, "
                                             "half-exponential, fsw, delta, full-eckart");
  fs.bind(app, "--v0", &RunConfig::v0, "Depth V0");
  fs.bind(app, "--a", &RunConfig::a, "Length scale a");
  fs.bind(app, "--lambda", &RunConfig::lambda, "Delta strength");
  fs.bind(app, "--state", &RunConfig::state, "State index n");
  fs.bind(app, "--dx", &RunConfig::dx, "Position step (default min(a/2000, 1e-3 a))");
  add_output_flags(app, fs);
}

void add_momentum_flags(CLI::App& app, FlagSet& fs) {
  fs.bind(app, "--pmax", &RunConfig::p_max, "Momentum cutoff");
  fs.bind(app, "--dp", &RunConfig::dp, "Momentum step (default min(0.05, k/5))");
  CLI::Option* cut = app.add_option("--cutoffs", fs.cutoffs, "Four equally spaced cutoffs, e.g. 40,80,120,160");
  fs.bindings.emplace_back(cut, [&fs](RunConfig& c) { c.cutoffs = parse_cutoffs(fs.cutoffs); });
  CLI::Option* win = app.add_option("--window", fs.window, "Tail-fit window lo:hi");
  fs.bindings.emplace_back(win, [&fs](RunConfig& c) {
    std::tie(c.window_lo, c.window_hi) = parse_window(fs.window);
  });
}

// Writes text to cfg.out, or to `out` when no file was requested.
void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out);
  if (!file) throw UsageError("cannot write " + cfg.out);
  file << text;
}

void emit_json_copy(const RunConfig& cfg, const nlohmann::json& j) {
  if (cfg.json_path.empty()) return;
  std::ofstream file(cfg.json_path);
  if (!file) throw UsageError("cannot write " + cfg.json_path);
  file << j.dump(2) << '\n';
}

SolveOptions solve_options(const RunConfig& cfg) {
  SolveOptions so;
  so.dx = cfg.dx;
  return so;
}

BoundState pick_state(const PotentialSpec& spec, const RunConfig& cfg) {
  const auto states = solve_all(spec, solve_options(cfg));
  if (static_cast<std::size_t>(cfg.state) >= states.size())
    throw UsageError("state " + std::to_string(cfg.state) + " does not exist (" +
                     std::string(model_name(spec.kind)) + " has " + std::to_string(states.size()) +
                     " bound states)");
  return states[static_cast<std::size_t>(cfg.state)];
}

StateAnalysis analyse(const RunConfig& cfg) {
  const PotentialSpec spec = cfg.spec();
  const BoundState state = pick_state(spec, cfg);
  return analyse_state(spec, state, cfg.dx, cfg.transform_options(), cfg.cutoffs, cfg.window_lo,
                       cfg.window_hi);
}

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
  const PotentialSpec spec = cfg.spec();
  const auto states = solve_all(spec, solve_options(cfg));
  std::vector<int> nodes;
  for (const BoundState& s : states) nodes.push_back(node_count(assemble(spec, s, cfg.dx)));
  const nlohmann::json j = solve_json(spec, states, nodes);
  emit(cfg, j.dump(2) + "\n", out);
  emit_json_copy(cfg, j);
  return kExitPass;
}

int cmd_momdist(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const PotentialSpec spec = cfg.spec();
  const BoundState state = pick_state(spec, cfg);
  const WaveFunction wf = assemble(spec, state, cfg.dx);
  const MomentumDistribution md = transform(wf, cfg.transform_options());
  std::ostringstream csv;
  write_csv(md, csv);
  emit(cfg, csv.str(), out);
  emit_json_copy(cfg, momdist_json(md));
  const double residual = parseval_residual(md);
  if (residual > kMomdistParsevalLimit) {
    err << "momdist: Parseval residual " << residual << " exceeds " << kMomdistParsevalLimit << '\n';
    return kExitCheckFailed;
  }
  return kExitPass;
}

int cmd_report(const RunConfig& cfg, bool tail_only, std::ostream& out, std::ostream& err) {
  const StateAnalysis a = analyse(cfg);
  const nlohmann::json j = analysis_json(a);
  emit(cfg, j.dump(2) + "\n", out);
  emit_json_copy(cfg, j);
  if (tail_only && !a.tail) {
    err << "tail: " << a.tail_error << "; shrink the window\n";
    return kExitUsage;
  }
  return kExitPass;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const StateAnalysis a = analyse(cfg);
  nlohmann::json j = analysis_json(a);
  nlohmann::json checks = nlohmann::json::object();
  bool ok = true;
  for (const VerifyCheck& c : verify_checks(a)) {
    checks[c.key] = {{"value", c.value}, {"tolerance", c.tolerance}, {"passed", c.passed}};
    if (!c.passed) {
      ok = false;
      err << "verify: check '" << c.key << "' failed: " << c.value << " (tolerance " << c.tolerance
          << ")\n";
    }
  }
  j["checks"] = checks;
  j["passed"] = ok;
  emit(cfg, j.dump(2) + "\n", out);
  emit_json_copy(cfg, j);
  return ok ? kExitPass : kExitCheckFailed;
}

int cmd_suite(const RunConfig& cfg, std::ostream& out) {
  if (cfg.dx < 0.0) throw UsageError("dx must be positive");
  SuiteOptions opts;
  opts.dx = cfg.dx;
  const SuiteResult r = run_suite(opts);
  std::ostringstream table;
  print_table(r, table);
  emit(cfg, table.str(), out);
  emit_json_copy(cfg, suite_json(r));
  return r.passed() ? kExitPass : kExitCheckFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bound states and momentum distributions of one-dimensional wells", "halfwell"};
  app.require_subcommand(1);

  // One flag set per subcommand keeps explicit-flag tracking independent.
  std::vector<std::unique_ptr<FlagSet>> sets;
  auto sub = [&](const char* name, const char* help) {
    sets.push_back(std::make_unique<FlagSet>());
    return std::pair{app.add_subcommand(name, help), sets.back().get()};
  };

  auto [solve, fs_solve] = sub("solve", "Bound-state spectrum as JSON");
  add_model_flags(*solve, *fs_solve);
  auto [momdist, fs_mom] = sub("momdist", "Momentum distribution as CSV");
  add_model_flags(*momdist, *fs_mom);
  add_momentum_flags(*momdist, *fs_mom);
  auto [moments, fs_moments] = sub("moments", "Moment analysis report");
  add_model_flags(*moments, *fs_moments);
  add_momentum_flags(*moments, *fs_moments);
  auto [tail, fs_tail] = sub("tail", "Tail exponent report");
  add_model_flags(*tail, *fs_tail);
  add_momentum_flags(*tail, *fs_tail);
  auto [verify, fs_verify] = sub("verify", "Consistency checks for one state");
  add_model_flags(*verify, *fs_verify);
  add_momentum_flags(*verify, *fs_verify);
  auto [suite, fs_suite] = sub("suite", "Acceptance suite");
  fs_suite->bind(*suite, "--dx", &RunConfig::dx, "Position step for every model");
  add_output_flags(*suite, *fs_suite);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (solve->parsed()) return cmd_solve(fs_solve->resolve(), out);
    if (momdist->parsed()) return cmd_momdist(fs_mom->resolve(), out, err);
    if (moments->parsed()) return cmd_report(fs_moments->resolve(), false, out, err);
    if (tail->parsed()) return cmd_report(fs_tail->resolve(), true, out, err);
    if (verify->parsed()) return cmd_verify(fs_verify->resolve(), out, err);
    if (suite->parsed()) return cmd_suite(fs_suite->resolve(), out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidSpec& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace halfwell::cli
