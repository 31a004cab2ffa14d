#include "halfwell/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/special_functions/airy.hpp>

#include "halfwell/engine.hpp"
#include "halfwell/error.hpp"
#include "halfwell/parallel.hpp"

namespace halfwell {

namespace {

constexpr int kMaxRefineIterations = 200;

double resolve_dx(const PotentialSpec& spec, double dx) {
  return dx > 0.0 ? dx : default_dx(spec);
}

// Sign of Gamma(x) for non-integer x.
double gamma_sign(double x) {
  if (x > 0.0) return 1.0;
  return static_cast<long>(std::ceil(-x)) % 2 == 0 ? 1.0 : -1.0;
}

// Gamma(a) Gamma(b) / (Gamma(c) Gamma(d)) without intermediate overflow.
double gamma_ratio(double a, double b, double c, double d) {
  const double log_mag = std::lgamma(a) + std::lgamma(b) - std::lgamma(c) - std::lgamma(d);
  return gamma_sign(a) * gamma_sign(b) * gamma_sign(c) * gamma_sign(d) * std::exp(log_mag);
}

double eckart_index(const PotentialSpec& spec) {
  return 0.5 * (-1.0 + std::sqrt(1.0 + 4.0 * spec.v0 * spec.a * spec.a));
}

int sign_of(double v) { return v < 0.0 ? -1 : 1; }

}  // namespace

ClosedFormParams closed_form_params(const PotentialSpec& spec, double energy) {
  ClosedFormParams p;
  const double v0 = spec.v0, a = spec.a;
  p.omega = 2.0 * std::sqrt(v0) / a;
  p.gamma = std::pow(4.0 * v0 / (a * a), 0.25);
  p.nu = (energy + v0) / p.omega - 0.5;
  p.g = std::cbrt(v0 / a);
  p.y0 = -(energy + v0) / (p.g * p.g);
  p.s = eckart_index(spec);
  p.kappa = std::sqrt(energy + 2.0 * v0);
  p.q = std::sqrt(v0);
  return p;
}

std::vector<Bracket> scan_brackets(const PotentialSpec& spec, int n_scan, double dx) {
  validate(spec);
  if (n_scan < 100) throw DomainError("scan_brackets: n_scan must be >= 100");
  if (spec.kind == WellKind::DeltaWell) return {};
  dx = resolve_dx(spec, dx);
  const double delta = 1e-6 * spec.v0;
  const double lo = energy_floor(spec) + delta;
  const double hi = -delta;
  const auto n = static_cast<std::size_t>(n_scan);
  std::vector<double> energies(n), residuals(n);
  for (std::size_t i = 0; i < n; ++i)
    energies[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  parallel_for(n, [&](std::size_t i) {
    residuals[i] = matching_residual(spec, energies[i], dx);
  });
  std::vector<Bracket> out;
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (sign_of(residuals[i]) != sign_of(residuals[i + 1]))
      out.push_back({energies[i], energies[i + 1]});
  return out;
}

BoundState refine(const PotentialSpec& spec, Bracket bracket, double dx) {
  validate(spec);
  dx = resolve_dx(spec, dx);
  auto residual = [&](double e) { return matching_residual(spec, e, dx); };

  double lo = bracket.lo, hi = bracket.hi;
  double f_lo = residual(lo), f_hi = residual(hi);
  if (sign_of(f_lo) == sign_of(f_hi))
    throw DomainError("refine: residual has the same sign at both bracket ends");
  // Illinois weights are applied to copies; the true values feed the final
  // interpolation.
  double g_lo = f_lo, g_hi = f_hi;
  int last_side = 0;
  double width_before = hi - lo;
  const double tol = 1e-10 * spec.v0;

  int iter = 0;
  while (hi - lo >= tol) {
    if (++iter > kMaxRefineIterations)
      throw ConvergenceError("refine: no convergence within 200 iterations");
    double e = (lo * g_hi - hi * g_lo) / (g_hi - g_lo);
    const double guard = 1e-3 * (hi - lo);
    const bool stalled = iter % 3 == 0 && (hi - lo) > 0.5 * width_before;
    if (!(e > lo + guard && e < hi - guard) || stalled) e = 0.5 * (lo + hi);
    if (iter % 3 == 0) width_before = hi - lo;

    const double f = residual(e);
    if (f == 0.0) {
      lo = hi = e;
      f_lo = f_hi = 0.0;
      break;
    }
    if (sign_of(f) == sign_of(f_lo)) {
      lo = e;
      f_lo = g_lo = f;
      if (last_side == -1) g_hi *= 0.5;
      last_side = -1;
    } else {
      hi = e;
      f_hi = g_hi = f;
      if (last_side == 1) g_lo *= 0.5;
      last_side = 1;
    }
  }

  double energy = lo;
  if (hi > lo && f_hi != f_lo) {
    energy = (lo * f_hi - hi * f_lo) / (f_hi - f_lo);
    energy = std::clamp(energy, lo, hi);
  }

  const ShotResult shot = integrate_inward(spec, energy, dx);
  BoundState st;
  st.energy = energy;
  st.k = std::sqrt(-energy);
  st.residual = std::abs(matching_residual(spec, shot));
  st.bracket = bracket;
  st.n = shot.nodes;
  if (spec.kind == WellKind::FullEckart) {
    const bool even = std::abs(shot.psi0) > std::abs(shot.dpsi0);
    st.parity = even ? Parity::Even : Parity::Odd;
    st.n = 2 * shot.nodes + (even ? 0 : 1);
  }
  return st;
}

BoundState delta_bound_state(const PotentialSpec& spec) {
  validate(spec);
  BoundState st;
  st.k = spec.lambda / 2.0;
  st.energy = -st.k * st.k;
  st.bracket = {st.energy, st.energy};
  st.parity = Parity::Even;
  return st;
}

std::vector<BoundState> solve_all(const PotentialSpec& spec, const SolveOptions& opts) {
  validate(spec);
  if (spec.kind == WellKind::DeltaWell) return {delta_bound_state(spec)};
  const double dx = resolve_dx(spec, opts.dx);

  for (int attempt = 0; attempt < 2; ++attempt) {
    const int n_scan = opts.n_scan << attempt;
    const auto brackets = scan_brackets(spec, n_scan, dx);
    std::vector<BoundState> states(brackets.size());
    parallel_for(brackets.size(), [&](std::size_t i) { states[i] = refine(spec, brackets[i], dx); });
    std::sort(states.begin(), states.end(),
              [](const BoundState& l, const BoundState& r) { return l.energy < r.energy; });
    bool indexed = true;
    for (std::size_t i = 0; i < states.size(); ++i)
      indexed = indexed && states[i].n == static_cast<int>(i);
    if (indexed) return states;
  }
  throw ConvergenceError("solve_all: node indices are not 0..N-1 (missed state)");
}

std::optional<double> closed_form_residual(const PotentialSpec& spec, double energy) {
  validate(spec);
  const double k = std::sqrt(-energy);
  switch (spec.kind) {
    case WellKind::DeltaWell:
      return k - spec.lambda / 2.0;
    case WellKind::FiniteSquareWell: {
      // Pole-free form of tan(q a) = 2 k q / (q^2 - k^2).
      const double q = std::sqrt(spec.v0 + energy);
      return (q * q - k * k) * std::sin(q * spec.a) - 2.0 * k * q * std::cos(q * spec.a);
    }
    case WellKind::HalfEckart: {
      const double s = eckart_index(spec);
      const double ka = k * spec.a;
      return ka + 2.0 * gamma_ratio(0.5 * (1.0 + ka - s), 0.5 * (2.0 + ka + s),
                                    0.5 * (ka - s), 0.5 * (1.0 + ka + s));
    }
    case WellKind::HalfTriangular: {
      const ClosedFormParams p = closed_form_params(spec, energy);
      return p.g * boost::math::airy_ai_prime(p.y0) - k * boost::math::airy_ai(p.y0);
    }
    case WellKind::FullEckart:
      // Levels k a = s - n.
      return std::sin(std::numbers::pi * (eckart_index(spec) - k * spec.a));
    default:
      return std::nullopt;
  }
}

}  // namespace halfwell
