#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "halfwell/eigensolver.hpp"
#include "halfwell/model.hpp"

namespace halfwell {

/// How psi is represented on x < 0.
enum class LeftBranch {
  Exponential,  // psi(0) e^{kx}; half wells, square well, delta well
  EvenMirror,   // psi(-x) = psi(x)
  OddMirror,    // psi(-x) = -psi(x)
};

/// Normalised eigenfunction: analytic or mirrored left side joined at x = 0
/// to samples on the uniform grid x_i = i dx, i = 0..N (N even).
struct WaveFunction {
  PotentialSpec spec;
  BoundState state;
  LeftBranch left = LeftBranch::Exponential;
  double psi0 = 0.0;   // psi(0)
  double dpsi0 = 0.0;  // psi'(0+)
  double dx = 0.0;
  std::vector<double> samples;
  double norm_constant = 1.0;  // factor applied to the max-normalised shot
  bool closed_form = false;    // samples are exact (delta well)

  double x(std::size_t i) const { return dx * static_cast<double>(i); }
  double x_max() const { return samples.empty() ? 0.0 : x(samples.size() - 1); }
};

/// Builds the unit-norm eigenfunction for a state from solve_all, with the
/// sign fixed so that psi(0) > 0 (psi'(0) > 0 for odd states).
/// Throws ConvergenceError if the shot has not decayed below 1e-12 at x_max.
WaveFunction assemble(const PotentialSpec& spec, const BoundState& state, double dx = 0.0);

/// psi(x): left branch for x < 0, 4-point cubic interpolation on the grid,
/// 0 beyond x_max.
double evaluate(const WaveFunction& wf, double x);

/// |\int psi^2 - 1| using Simpson at half the grid spacing on interpolated
/// values; independent of the quadrature used by assemble.
double norm_residual(const WaveFunction& wf);

/// \int_{x<0} psi^2 dx.
double left_mass(const WaveFunction& wf);

/// Zeros of psi on the whole line: sign changes of the samples (|psi| below
/// 1e-12 ignored), doubled for mirrored states, plus the node at x = 0 of an
/// odd state.
int node_count(const WaveFunction& wf);

/// \int_0^{x_max} g(x, psi(x), V(x)) dx by Simpson, split at the jumps of V
/// so each piece sees one-sided potential values.
double integrate_right(const WaveFunction& wf,
                       const std::function<double(double, double, double)>& g);

}  // namespace halfwell
