#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "halfwell/wavefun.hpp"

namespace halfwell {

inline constexpr double kDefaultDp = 0.05;

/// Default momentum spacing for a state with decay constant k.
double default_dp(double k);

struct TransformOptions {
  double p_max = 200.0;
  /// 0 selects min(0.05, k/5): the half-width of I(p) near p = 0 is about k,
  /// and Simpson needs several points across it.
  double dp = 0.0;
  /// Largest admissible p_max * dx for the Filon panels.
  double filon_bound = 2.0;
};

/// phi(p) = (2 pi)^{-1/2} \int psi(x) e^{-ipx} dx on the symmetric grid
/// p_i = (i - M) dp, i = 0..2M, with I(p) = |phi(p)|^2.
struct MomentumDistribution {
  PotentialSpec spec;  // source wavefunction's well and state
  BoundState state;
  double dp = 0.0;
  double p_max = 0.0;
  std::vector<double> p;
  std::vector<std::complex<double>> phi;
  std::vector<double> intensity;

  /// Index of p = 0.
  std::size_t zero_index() const { return (p.size() - 1) / 2; }
};

/// Momentum-space wavefunction. The exponential left tail is transformed
/// exactly, psi(0)/(k - ip); the sampled right side uses Filon quadrature.
/// For the analytic full Eckart well the integral is taken along a line
/// Im x = -sigma with 0 <= sigma <= contour_shift(), chosen per p, which keeps
/// the exponentially small tail of phi above the rounding floor of real-axis
/// quadrature.
/// Throws DomainError if p_max * dx exceeds opts.filon_bound.
MomentumDistribution transform(const WaveFunction& wf, const TransformOptions& opts = {});

/// Largest shift of the integration line for wells analytic in a strip: 0.9 of
/// the distance to the nearest pole of V (pi a / 2 for sech^2). Zero otherwise.
double contour_shift(const PotentialSpec& spec);

/// psi(t - i sigma) on the grid of wf, from the analytic continuation of the
/// Schroedinger equation. Requires a mirror-symmetric wavefunction.
std::vector<std::complex<double>> shifted_line_samples(const WaveFunction& wf, double sigma);

struct ParsevalCheck {
  double residual = 0.0;       // |2 Simpson(I, 0..p_max) - 1|
  double tail_estimate = 0.0;  // 2 c6 / (5 p_max^5)
};

ParsevalCheck parseval(const MomentumDistribution& md);
double parseval_residual(const MomentumDistribution& md);

struct WeightedRow {
  double p = 0.0;
  double p2I = 0.0;
  double p4I = 0.0;
  double p6I = 0.0;
};

/// (p, p^2 I, p^4 I, p^6 I) for every grid point.
std::vector<WeightedRow> weighted_curves(const MomentumDistribution& md);

}  // namespace halfwell
