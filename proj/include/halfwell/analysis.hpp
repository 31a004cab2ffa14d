#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "halfwell/momentum.hpp"
#include "halfwell/wavefun.hpp"

namespace halfwell {

enum class Verdict { Convergent, Divergent, Indeterminate };
std::string_view verdict_name(Verdict v);

/// Growth of the partial moments M_{2j}(P) = \int_{|p|<=P} p^{2j} I dp over
/// four equally spaced cutoffs P1 < P2 < P3 < P4.
struct DivergenceReport {
  int order = 0;
  std::vector<double> cutoffs;
  std::vector<double> partials;
  /// [M(P4) - M(P3)] / [M(P2) - M(P1)]
  double growth_ratio = 0.0;
  Verdict verdict = Verdict::Indeterminate;
  std::optional<double> limit_estimate;  // Convergent only
  std::optional<double> linear_rate;     // Divergent only: dM/dP
};

/// Least-squares fit of ln I against ln p over a window.
struct TailFit {
  double p_lo = 0.0;
  double p_hi = 0.0;
  std::size_t points = 0;
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  double plateau_c6 = 0.0;  // median of p^6 I over the window
};

/// Stationary Ehrenfest check <V'> = 0, split into the smooth interior part
/// and the jump contribution(s).
struct EhrenfestReport {
  double interior = 0.0;  // \int_0^inf U' psi^2 (U = -V on x > 0)
  double boundary = 0.0;  // V0 psi(0)^2, or V0 [psi(0)^2 - psi(a)^2] for the square well
  double residual = 0.0;  // signed <V'>
  double relative = 0.0;
  /// Delta and full Eckart: <V'> vanishes identically by parity.
  bool exact_by_symmetry = false;
  /// Square well only: |psi(0)^2 - psi(a)^2|.
  std::optional<double> endpoint_gap;
};

struct CrossRepresentation {
  double p2_position = 0.0;
  double p2_momentum = 0.0;
  double p2_relative = 0.0;
  std::optional<double> p4_position;  // absent when <p^4> diverges
  std::optional<double> p4_momentum_corrected;
  std::optional<double> p4_relative;
  double p1 = 0.0;  // odd moments, zero by symmetry of I
  double p3 = 0.0;
};

inline constexpr double kDefaultTailLo = 40.0;
inline constexpr double kDefaultTailHi = 150.0;
inline const std::vector<double> kDefaultCutoffs{40.0, 80.0, 120.0, 160.0};

/// <p^2> = E - \int V psi^2 dx.
double p2_position(const WaveFunction& wf, const PotentialSpec& spec);

/// <p^4> = \int (E - V)^2 psi^2 dx. Throws DivergentMoment for the delta well.
double p4_position(const WaveFunction& wf, const PotentialSpec& spec);

/// 2 x Simpson over [0, P] of p^order I(p); order in {0, 2, 4, 6}.
double partial_moment(const MomentumDistribution& md, int order, double cutoff);

/// Convergent iff growth ratio < 0.2, Divergent iff > 0.5, else Indeterminate.
DivergenceReport divergence_verdict(const MomentumDistribution& md, int order,
                                    const std::vector<double>& cutoffs = kDefaultCutoffs);

/// Throws DomainError if the window starts below p = 20, has fewer than 50
/// points, or contains I <= 0.
TailFit tail_exponent(const MomentumDistribution& md, double p_lo = kDefaultTailLo,
                      double p_hi = kDefaultTailHi);

EhrenfestReport ehrenfest(const WaveFunction& wf, const PotentialSpec& spec);

/// Moments from both representations. Momentum-space values include the
/// analytic tail beyond p_max for the power law predicted by classify().
CrossRepresentation cross_representation(const WaveFunction& wf, const MomentumDistribution& md);

/// 2 \int_P^inf p^order C p^alpha dp for the class tail exponent alpha, with C
/// the median of p^{-alpha} I over [0.2, 0.75] p_max. Zero for smooth wells;
/// infinite when the tail integral diverges.
double moment_tail(const MomentumDistribution& md, int order, double cutoff);

}  // namespace halfwell
