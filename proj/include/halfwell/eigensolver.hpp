#pragma once

#include <optional>
#include <vector>

#include "halfwell/model.hpp"

namespace halfwell {

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
};

/// Parity about x = 0; only meaningful for the symmetric wells.
enum class Parity { None, Even, Odd };

struct BoundState {
  int n = 0;            // node index over the whole real line
  double energy = 0.0;
  double k = 0.0;       // sqrt(-E)
  double residual = 0.0;  // |matching residual| at the converged energy
  Bracket bracket;
  Parity parity = Parity::None;
};

/// Parameters of the special-function solutions, 2m = hbar = 1.
struct ClosedFormParams {
  double nu = 0.0;     // parabolic-cylinder order, (E + V0)/omega - 1/2
  double gamma = 0.0;  // (4 V0 / a^2)^{1/4}
  double omega = 0.0;  // 2 sqrt(V0) / a
  double g = 0.0;      // (V0 / a)^{1/3}
  double y0 = 0.0;     // -(E + V0) / g^2
  double s = 0.0;      // Eckart index, s (s + 1) = V0 a^2
  double kappa = 0.0;  // sqrt(E + 2 V0)
  double q = 0.0;      // sqrt(V0)
};

ClosedFormParams closed_form_params(const PotentialSpec& spec, double energy);

struct SolveOptions {
  int n_scan = 400;
  double dx = 0.0;  // <= 0 selects default_dx(spec)
};

/// Residual signs at n_scan energies uniform in (floor + d, -d), d = 1e-6 v0;
/// returns consecutive pairs with opposite signs.
std::vector<Bracket> scan_brackets(const PotentialSpec& spec, int n_scan, double dx);

/// Safeguarded secant (Illinois) refinement until the bracket is narrower
/// than 1e-10 v0. Throws ConvergenceError after 200 iterations.
BoundState refine(const PotentialSpec& spec, Bracket bracket, double dx);

/// The analytic delta-well level, E = -lambda^2/4.
BoundState delta_bound_state(const PotentialSpec& spec);

/// All bound states sorted by energy. Node indices must come out as 0..N-1;
/// on a gap the scan is repeated once with doubled resolution, then a
/// ConvergenceError is raised.
std::vector<BoundState> solve_all(const PotentialSpec& spec, const SolveOptions& opts = {});

/// Residual of the closed-form quantisation condition where one is provided:
/// square well, delta well, half Eckart (Gamma functions), half triangular
/// (Airy), full Eckart. Other wells return std::nullopt.
std::optional<double> closed_form_residual(const PotentialSpec& spec, double energy);

}  // namespace halfwell
