#include "halfwell/model.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

#include "halfwell/error.hpp"

namespace halfwell {

namespace {

constexpr std::array<std::pair<WellKind, std::string_view>, 7> kNames{{
    {WellKind::HalfParabolic, "half-parabolic"},
    {WellKind::HalfTriangular, "half-triangular"},
    {WellKind::HalfEckart, "half-eckart"},
    {WellKind::HalfExponential, "half-exponential"},
    {WellKind::FiniteSquareWell, "fsw"},
    {WellKind::DeltaWell, "delta"},
    {WellKind::FullEckart, "full-eckart"},
}};

// |V| <= kFlatTolerance * v0 counts as the asymptotic zero of a flat tail.
constexpr double kFlatTolerance = 1e-9;

double sech2(double u) {
  const double c = std::cosh(u);
  return 1.0 / (c * c);
}

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

// Right half (x >= 0) of the half wells.
double half_well_right(const PotentialSpec& s, double x) {
  switch (s.kind) {
    case WellKind::HalfParabolic:
      return -s.v0 * (1.0 - x * x / (s.a * s.a));
    case WellKind::HalfTriangular:
      return -s.v0 * (1.0 - x / s.a);
    case WellKind::HalfEckart:
      return -s.v0 * sech2(x / s.a);
    case WellKind::HalfExponential:
      return -s.v0 * (2.0 - std::exp(2.0 * x / s.a));
    default:
      return 0.0;
  }
}

double half_well_right_derivative(const PotentialSpec& s, double x) {
  switch (s.kind) {
    case WellKind::HalfParabolic:
      return 2.0 * s.v0 * x / (s.a * s.a);
    case WellKind::HalfTriangular:
      return s.v0 / s.a;
    case WellKind::HalfEckart:
      return 2.0 * s.v0 / s.a * sech2(x / s.a) * std::tanh(x / s.a);
    case WellKind::HalfExponential:
      return 2.0 * s.v0 / s.a * std::exp(2.0 * x / s.a);
    default:
      return 0.0;
  }
}

}  // namespace

double flat_tail_start(const PotentialSpec& s) {
  if (!has_flat_tail(s.kind)) throw DomainError("flat_tail_start: the potential has no flat tail");
  if (s.kind == WellKind::FiniteSquareWell) return s.a;
  // sech^2(x/a) = tol  =>  cosh(x/a) = tol^{-1/2}
  return s.a * std::acosh(1.0 / std::sqrt(kFlatTolerance));
}

std::string_view model_name(WellKind kind) {
  for (const auto& [k, name] : kNames)
    if (k == kind) return name;
  return "unknown";
}

WellKind parse_model_name(std::string_view name) {
  for (const auto& [k, n] : kNames)
    if (n == name) return k;
  throw InvalidSpec("unknown model '" + std::string(name) + "'");
}

const std::vector<WellKind>& all_kinds() {
  static const std::vector<WellKind> kinds = [] {
    std::vector<WellKind> v;
    for (const auto& entry : kNames) v.push_back(entry.first);
    return v;
  }();
  return kinds;
}

bool is_half_well(WellKind kind) {
  return kind == WellKind::HalfParabolic || kind == WellKind::HalfTriangular ||
         kind == WellKind::HalfEckart || kind == WellKind::HalfExponential;
}

bool has_flat_tail(WellKind kind) {
  return kind == WellKind::HalfEckart || kind == WellKind::FullEckart ||
         kind == WellKind::FiniteSquareWell;
}

void validate(const PotentialSpec& spec) {
  if (spec.kind == WellKind::DeltaWell) {
    if (!positive_finite(spec.lambda))
      throw InvalidSpec("lambda must be positive");
    return;
  }
  if (!positive_finite(spec.v0)) throw InvalidSpec("v0 must be positive");
  if (!positive_finite(spec.a)) throw InvalidSpec("a must be positive");
}

double piece_value(const PotentialSpec& spec, double x, double inside) {
  switch (spec.kind) {
    case WellKind::FiniteSquareWell:
      return (inside >= 0.0 && inside < spec.a) ? -spec.v0 : 0.0;
    case WellKind::DeltaWell:
      return 0.0;
    case WellKind::FullEckart:
      return -spec.v0 * sech2(x / spec.a);
    default:
      return inside < 0.0 ? 0.0 : half_well_right(spec, x);
  }
}

double potential_value(const PotentialSpec& spec, double x) {
  if (!std::isfinite(x)) throw DomainError("potential_value: non-finite x");
  if (spec.kind == WellKind::DeltaWell && x == 0.0)
    throw DomainError("delta well has no pointwise value at x = 0");
  return piece_value(spec, x, x);
}

double piece_derivative(const PotentialSpec& spec, double x, double inside) {
  switch (spec.kind) {
    case WellKind::FiniteSquareWell:
    case WellKind::DeltaWell:
      return 0.0;
    case WellKind::FullEckart: {
      const double u = x / spec.a;
      return 2.0 * spec.v0 / spec.a * sech2(u) * std::tanh(u);
    }
    default:
      return inside < 0.0 ? 0.0 : half_well_right_derivative(spec, x);
  }
}

double smooth_derivative(const PotentialSpec& spec, double x) {
  if (!std::isfinite(x)) throw DomainError("smooth_derivative: non-finite x");
  if (spec.kind != WellKind::FullEckart && x == 0.0)
    throw DomainError("smooth_derivative: x = 0 is a discontinuity");
  if (spec.kind == WellKind::FiniteSquareWell && x == spec.a)
    throw DomainError("smooth_derivative: x = a is a discontinuity");
  return piece_derivative(spec, x, x);
}

ContinuityClass classify(const PotentialSpec& spec) {
  switch (spec.kind) {
    case WellKind::DeltaWell:
      return {Continuity::DeltaSingular, -4, 4};
    case WellKind::FullEckart:
      return {Continuity::Smooth, std::nullopt, std::nullopt};
    default:
      return {Continuity::JumpDiscontinuous, -6, 6};
  }
}

double energy_floor(const PotentialSpec& spec) {
  if (spec.kind == WellKind::DeltaWell)
    return -spec.lambda * spec.lambda / 4.0;
  return -spec.v0;
}

std::vector<double> interior_breakpoints(const PotentialSpec& spec) {
  if (spec.kind == WellKind::FiniteSquareWell) return {spec.a};
  return {};
}

double domain_cutoff(const PotentialSpec& spec, double energy, double margin) {
  validate(spec);
  if (spec.kind == WellKind::DeltaWell)
    throw DomainError("domain_cutoff: the delta well is solved analytically");
  if (!(energy > energy_floor(spec) && energy < 0.0))
    throw DomainError("domain_cutoff: energy outside (floor, 0)");

  const double k = std::sqrt(-energy);
  const bool flat = has_flat_tail(spec.kind);
  const double x_flat = flat ? flat_tail_start(spec) : 0.0;
  // Rising walls need the step to shrink with the local decay length; the
  // margin is reached within a few multiples of a for every catalog wall.
  const double h = spec.a / 1000.0;
  const double x_limit = flat ? x_flat : 1e6 * spec.a;

  double w = 0.0;
  double x = 0.0;
  while (x < x_limit) {
    const double step = std::min(h, x_limit - x);
    const double xm = x + 0.5 * step;
    const double dw = std::sqrt(std::max(piece_value(spec, xm, xm) - energy, 0.0)) * step;
    if (w + dw >= margin) {
      const double x_hit = x + step * (margin - w) / dw;
      return flat ? std::max(x_flat, x_hit) : x_hit;
    }
    w += dw;
    x += step;
  }
  if (!flat) throw ConvergenceError("domain_cutoff: WKB margin never reached");
  // Beyond x_flat the integrand is k to within 1e-9 v0.
  return x_flat + (margin - w) / k;
}

}  // namespace halfwell
