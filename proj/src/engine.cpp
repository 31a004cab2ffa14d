#include "halfwell/engine.hpp"

#include <algorithm>
#include <cmath>

#include "halfwell/error.hpp"

namespace halfwell {

namespace {

constexpr double kSeed = 1e-30;
constexpr double kOverflow = 1e250;
constexpr double kNodeFloor = 1e-12;

struct Grid {
  double dx;
  std::size_t n;  // intervals, even
};

Grid make_grid(const PotentialSpec& spec, double energy, double dx) {
  const double h = snapped_dx(spec, dx);
  const double x_cut = domain_cutoff(spec, energy);
  const auto half = static_cast<std::size_t>(std::ceil(x_cut / (2.0 * h)));
  return {h, 2 * std::max<std::size_t>(half, 1)};
}

struct RawShot {
  double psi0;
  double dpsi0;
  double max_abs;
  int rescales;
};

// Integrates from x_n down to x_0. When `samples` is given it receives
// psi(i dx) for every grid point (unnormalised).
//
// Without samples only the junction values matter. Past the flat-tail point
// V is below 1e-9 v0, the decaying pair (1, -sqrt(q)) is an eigenvector of
// the constant-q RK4 step, and the scale drops out of the residual, so the
// shot starts at the first grid point beyond that x. This keeps the scan
// cheap near threshold, where x_max = 35/k grows without bound.
RawShot shoot(const PotentialSpec& spec, double energy, const Grid& grid,
              std::vector<double>* samples) {
  const double h = grid.dx;
  std::size_t n = grid.n;
  if (!samples && has_flat_tail(spec.kind)) {
    const auto past_flat = static_cast<std::size_t>(std::ceil(flat_tail_start(spec) / h)) + 1;
    n = std::min(n, past_flat);
  }
  const double x_end = h * static_cast<double>(n);
  const double q_end = piece_value(spec, x_end, x_end - 0.5 * h) - energy;
  if (!(q_end > 0.0))
    throw DomainError("integrate_inward: V(x_max) <= E, start point not forbidden");

  const bool jumps = !interior_breakpoints(spec).empty();
  double u = kSeed;
  double w = -std::sqrt(q_end) * kSeed;
  double max_abs = std::abs(u);
  int rescales = 0;
  if (samples) {
    samples->assign(n + 1, 0.0);
    (*samples)[n] = u;
  }

  double q_hi = q_end;
  for (std::size_t i = n; i-- > 0;) {
    const double x1 = h * static_cast<double>(i + 1);
    const double x0 = h * static_cast<double>(i);
    const double xm = x1 - 0.5 * h;
    if (jumps) q_hi = piece_value(spec, x1, xm) - energy;
    const double q_mid = piece_value(spec, xm, xm) - energy;
    const double q_lo = piece_value(spec, x0, xm) - energy;

    // Classical RK4 for (u, w)' = (w, q u) with step -h.
    const double s = -h;
    const double k1u = w, k1w = q_hi * u;
    const double k2u = w + 0.5 * s * k1w, k2w = q_mid * (u + 0.5 * s * k1u);
    const double k3u = w + 0.5 * s * k2w, k3w = q_mid * (u + 0.5 * s * k2u);
    const double k4u = w + s * k3w, k4w = q_lo * (u + s * k3u);
    u += s / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
    w += s / 6.0 * (k1w + 2.0 * k2w + 2.0 * k3w + k4w);
    q_hi = q_lo;

    if (samples) (*samples)[i] = u;
    max_abs = std::max(max_abs, std::abs(u));
    if (std::abs(u) > kOverflow || std::abs(w) > kOverflow) {
      const double scale = 1.0 / kOverflow;
      u *= scale;
      w *= scale;
      max_abs *= scale;
      if (samples)
        for (std::size_t j = i; j <= n; ++j) (*samples)[j] *= scale;
      ++rescales;
    }
  }
  return {u, w, max_abs, rescales};
}

double wronskian(const PotentialSpec& spec, double energy, double psi0, double dpsi0) {
  if (spec.kind == WellKind::FullEckart) return 2.0 * psi0 * dpsi0;
  return dpsi0 - std::sqrt(-energy) * psi0;
}

void check_shootable(const PotentialSpec& spec, double dx) {
  validate(spec);
  if (spec.kind == WellKind::DeltaWell)
    throw DomainError("the delta well is solved analytically, not by shooting");
  if (!(dx > 0.0) || !std::isfinite(dx)) throw DomainError("dx must be positive");
}

}  // namespace

double default_dx(const PotentialSpec& spec) {
  return std::min(spec.a / 2000.0, 1e-3 * spec.a);
}

double snapped_dx(const PotentialSpec& spec, double dx) {
  const double per_a = std::max(1.0, std::round(spec.a / (2.0 * dx)));
  return spec.a / (2.0 * per_a);
}

ShotResult integrate_inward(const PotentialSpec& spec, double energy, double dx) {
  check_shootable(spec, dx);
  const Grid grid = make_grid(spec, energy, dx);
  ShotResult shot;
  shot.e_trial = energy;
  shot.dx = grid.dx;
  const RawShot raw = shoot(spec, energy, grid, &shot.psi);
  const double scale = 1.0 / raw.max_abs;
  for (double& v : shot.psi) v *= scale;
  shot.psi0 = raw.psi0 * scale;
  shot.dpsi0 = raw.dpsi0 * scale;
  shot.rescale_count = raw.rescales;
  shot.nodes = count_nodes(shot);
  return shot;
}

double matching_residual(const PotentialSpec& spec, double energy, double dx) {
  check_shootable(spec, dx);
  const RawShot raw = shoot(spec, energy, make_grid(spec, energy, dx), nullptr);
  return wronskian(spec, energy, raw.psi0 / raw.max_abs, raw.dpsi0 / raw.max_abs);
}

double matching_residual(const PotentialSpec& spec, const ShotResult& shot) {
  return wronskian(spec, shot.e_trial, shot.psi0, shot.dpsi0);
}

int count_nodes(const ShotResult& shot) {
  int nodes = 0;
  int last_sign = 0;
  // Interior points only: x = 0 and x = x_max are excluded.
  for (std::size_t i = 1; i + 1 < shot.psi.size(); ++i) {
    const double v = shot.psi[i];
    if (std::abs(v) < kNodeFloor) continue;
    const int sign = v > 0.0 ? 1 : -1;
    if (last_sign != 0 && sign != last_sign) ++nodes;
    last_sign = sign;
  }
  return nodes;
}

}  // namespace halfwell
