#pragma once

// Catalog of one-dimensional wells. Units are fixed throughout the library:
// 2m = 1 and hbar = 1, so the Schroedinger equation reads psi'' = (V - E) psi.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace halfwell {

enum class WellKind {
  HalfParabolic,
  HalfTriangular,
  HalfEckart,
  HalfExponential,
  FiniteSquareWell,
  DeltaWell,
  FullEckart,
};

struct PotentialSpec {
  WellKind kind = WellKind::HalfParabolic;
  double v0 = 15.0;     // depth scale
  double a = 2.0;       // length scale
  double lambda = 2.0;  // delta strength, DeltaWell only
};

enum class Continuity { Smooth, JumpDiscontinuous, DeltaSingular };

struct ContinuityClass {
  Continuity cls = Continuity::Smooth;
  std::optional<int> predicted_tail_exponent;
  std::optional<int> first_divergent_even_moment;
};

/// Kebab-case name used on the command line and in reports.
std::string_view model_name(WellKind kind);
/// Inverse of model_name; throws InvalidSpec on unknown names.
WellKind parse_model_name(std::string_view name);
const std::vector<WellKind>& all_kinds();

bool is_half_well(WellKind kind);
/// True for wells whose potential vanishes beyond a finite distance
/// (up to 1e-9 v0): Eckart variants and the square well.
bool has_flat_tail(WellKind kind);

/// Smallest x beyond which |V| <= 1e-9 v0. Throws DomainError unless
/// has_flat_tail(spec.kind).
double flat_tail_start(const PotentialSpec& spec);

/// Throws InvalidSpec unless every parameter the kind uses is positive and finite.
void validate(const PotentialSpec& spec);

/// V(x). For the delta well only x != 0 is accepted, where V = 0.
double potential_value(const PotentialSpec& spec, double x);

/// Evaluates the smooth formula of the piece containing `inside` at `x`.
/// Gives one-sided limits at jumps: piece_value(spec, 0, +eps) is V(0+).
double piece_value(const PotentialSpec& spec, double x, double inside);

/// Derivative of the smooth part of V. Throws DomainError at 0 for wells with
/// a jump or delta there, and at x = a for the square well.
double smooth_derivative(const PotentialSpec& spec, double x);

/// Derivative of the piece containing `inside`, evaluated at `x`.
double piece_derivative(const PotentialSpec& spec, double x, double inside);

ContinuityClass classify(const PotentialSpec& spec);

/// Lowest admissible energy: min V, or the analytic level for the delta well.
double energy_floor(const PotentialSpec& spec);

/// Abscissa of the jump discontinuities of V on x > 0 (the square well's
/// right wall); the jump at x = 0 is implied by is_half_well.
std::vector<double> interior_breakpoints(const PotentialSpec& spec);

inline constexpr double kDefaultWkbMargin = 35.0;

/// Right end of the integration domain at energy E. Rising walls use the
/// smallest x where the WKB exponent from the turning point reaches
/// `margin`; flat-tailed wells additionally extend past the point where
/// |V| <= 1e-9 v0.
double domain_cutoff(const PotentialSpec& spec, double energy,
                     double margin = kDefaultWkbMargin);

}  // namespace halfwell
