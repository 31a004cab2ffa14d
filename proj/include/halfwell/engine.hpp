#pragma once

#include <cstddef>
#include <vector>

#include "halfwell/model.hpp"

namespace halfwell {

/// One inward integration of psi'' = (V - E) psi over [0, x_max].
struct ShotResult {
  double e_trial = 0.0;
  double dx = 0.0;
  double psi0 = 0.0;   // psi(0+)
  double dpsi0 = 0.0;  // psi'(0+)
  /// psi(i dx), i = 0..N (N even), scaled so that max |psi| = 1.
  std::vector<double> psi;
  int nodes = 0;
  int rescale_count = 0;

  double x(std::size_t i) const { return dx * static_cast<double>(i); }
  double x_max() const { return psi.empty() ? 0.0 : x(psi.size() - 1); }
};

/// min(a/2000, 1e-3 a).
double default_dx(const PotentialSpec& spec);

/// Grid step actually used for a requested dx: a / n with n even, so that
/// x = a falls on a panel boundary of the Simpson/Filon rules.
double snapped_dx(const PotentialSpec& spec, double dx);

/// Fixed-step RK4 from x_max = domain_cutoff(spec, E) down to 0, seeded with
/// the WKB-decaying pair psi = 1e-30, psi' = -sqrt(V - E) psi.
ShotResult integrate_inward(const PotentialSpec& spec, double energy, double dx);

/// Wronskian of the left- and right-decaying solutions at x = 0 for the
/// max-normalised shot. Half wells and the square well: psi'(0) - k psi(0),
/// the left side being psi(0) e^{kx}. Full Eckart: 2 psi(0) psi'(0), the left
/// side being the mirror image of the right.
double matching_residual(const PotentialSpec& spec, double energy, double dx);

/// Same residual evaluated from an existing shot.
double matching_residual(const PotentialSpec& spec, const ShotResult& shot);

/// Strict sign changes of psi on (0, x_max), ignoring |psi| < 1e-12.
int count_nodes(const ShotResult& shot);

}  // namespace halfwell
