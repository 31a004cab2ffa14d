#include "halfwell/wavefun.hpp"

#include <algorithm>
#include <cmath>

#include "halfwell/engine.hpp"
#include "halfwell/error.hpp"
#include "halfwell/quadrature.hpp"

namespace halfwell {

namespace {

constexpr double kTailTolerance = 1e-12;

WaveFunction assemble_delta(const PotentialSpec& spec, const BoundState& state, double dx) {
  WaveFunction wf;
  wf.spec = spec;
  wf.state = state;
  wf.closed_form = true;
  const double k = state.k;
  wf.psi0 = std::sqrt(k);  // \int e^{-2k|x|} = 1/k
  wf.dpsi0 = -k * wf.psi0;
  wf.dx = dx;
  const double x_end = (kDefaultWkbMargin + 5.0) / k;
  const auto half = static_cast<std::size_t>(std::ceil(x_end / (2.0 * dx)));
  wf.samples.resize(2 * half + 1);
  for (std::size_t i = 0; i < wf.samples.size(); ++i)
    wf.samples[i] = wf.psi0 * std::exp(-k * wf.x(i));
  return wf;
}

double cubic(const WaveFunction& wf, double x) {
  const std::size_t n = wf.samples.size();
  const double u = x / wf.dx;
  const auto i = static_cast<std::size_t>(std::floor(u));
  if (static_cast<double>(i) == u) return wf.samples[i];
  if (n < 4) {
    const double t = u - static_cast<double>(i);
    return (1.0 - t) * wf.samples[i] + t * wf.samples[std::min(i + 1, n - 1)];
  }
  const std::size_t j0 = std::min(i > 0 ? i - 1 : 0, n - 4);
  double result = 0.0;
  for (std::size_t j = j0; j < j0 + 4; ++j) {
    double basis = 1.0;
    for (std::size_t m = j0; m < j0 + 4; ++m)
      if (m != j)
        basis *= (u - static_cast<double>(m)) / (static_cast<double>(j) - static_cast<double>(m));
    result += basis * wf.samples[j];
  }
  return result;
}

}  // namespace

WaveFunction assemble(const PotentialSpec& spec, const BoundState& state, double dx) {
  validate(spec);
  if (dx <= 0.0) dx = default_dx(spec);
  if (spec.kind == WellKind::DeltaWell) return assemble_delta(spec, state, dx);

  const ShotResult shot = integrate_inward(spec, state.energy, dx);
  if (std::abs(shot.psi.back()) >= kTailTolerance)
    throw ConvergenceError("assemble: wavefunction tail not decayed at x_max");

  WaveFunction wf;
  wf.spec = spec;
  wf.state = state;
  wf.dx = shot.dx;
  wf.samples = shot.psi;
  if (spec.kind == WellKind::FullEckart)
    wf.left = state.parity == Parity::Odd ? LeftBranch::OddMirror : LeftBranch::EvenMirror;

  std::vector<double> sq(wf.samples.size());
  std::transform(wf.samples.begin(), wf.samples.end(), sq.begin(),
                 [](double v) { return v * v; });
  const double right = quad::simpson(sq, wf.dx);
  const double left = wf.left == LeftBranch::Exponential
                          ? shot.psi0 * shot.psi0 / (2.0 * state.k)
                          : right;
  const double sign_ref = wf.left == LeftBranch::OddMirror ? shot.dpsi0 : shot.psi0;
  const double c = (sign_ref < 0.0 ? -1.0 : 1.0) / std::sqrt(left + right);

  for (double& v : wf.samples) v *= c;
  wf.norm_constant = c;
  wf.psi0 = wf.samples.front();
  wf.dpsi0 = c * shot.dpsi0;
  return wf;
}

double evaluate(const WaveFunction& wf, double x) {
  if (!std::isfinite(x)) throw DomainError("evaluate: non-finite x");
  if (wf.closed_form) return wf.psi0 * std::exp(-wf.state.k * std::abs(x));
  if (x < 0.0) {
    switch (wf.left) {
      case LeftBranch::Exponential:
        return wf.psi0 * std::exp(wf.state.k * x);
      case LeftBranch::EvenMirror:
        return evaluate(wf, -x);
      case LeftBranch::OddMirror:
        return -evaluate(wf, -x);
    }
  }
  if (x > wf.x_max()) return 0.0;
  return cubic(wf, x);
}

double left_mass(const WaveFunction& wf) {
  if (wf.left == LeftBranch::Exponential) return wf.psi0 * wf.psi0 / (2.0 * wf.state.k);
  return integrate_right(wf, [](double, double psi, double) { return psi * psi; });
}

int node_count(const WaveFunction& wf) {
  int right = 0;
  int last_sign = 0;
  for (std::size_t i = 1; i < wf.samples.size(); ++i) {
    const double v = wf.samples[i];
    if (std::abs(v) < kTailTolerance) continue;
    const int sign = v > 0.0 ? 1 : -1;
    if (last_sign != 0 && sign != last_sign) ++right;
    last_sign = sign;
  }
  switch (wf.left) {
    case LeftBranch::EvenMirror:
      return 2 * right;
    case LeftBranch::OddMirror:
      return 2 * right + 1;
    case LeftBranch::Exponential:
      break;
  }
  return right;
}

double norm_residual(const WaveFunction& wf) {
  if (wf.closed_form) return std::abs(wf.psi0 * wf.psi0 / wf.state.k - 1.0);
  const std::size_t n = 2 * (wf.samples.size() - 1);
  const double h = 0.5 * wf.dx;
  std::vector<double> sq(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    const double v = evaluate(wf, h * static_cast<double>(j));
    sq[j] = v * v;
  }
  const double right = quad::simpson(sq, h);
  const double left = wf.left == LeftBranch::Exponential ? wf.psi0 * wf.psi0 / (2.0 * wf.state.k)
                                                         : right;
  return std::abs(left + right - 1.0);
}

double integrate_right(const WaveFunction& wf,
                       const std::function<double(double, double, double)>& g) {
  std::vector<double> cuts{0.0};
  for (double b : interior_breakpoints(wf.spec))
    if (b < wf.x_max()) cuts.push_back(b);
  cuts.push_back(wf.x_max());

  double total = 0.0;
  std::vector<double> values;
  for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
    const auto i0 = static_cast<std::size_t>(std::llround(cuts[s] / wf.dx));
    const auto i1 = static_cast<std::size_t>(std::llround(cuts[s + 1] / wf.dx));
    const double mid = 0.5 * (cuts[s] + cuts[s + 1]);
    values.resize(i1 - i0 + 1);
    for (std::size_t i = i0; i <= i1; ++i) {
      const double x = wf.x(i);
      values[i - i0] = g(x, wf.samples[i], piece_value(wf.spec, x, mid));
    }
    total += quad::simpson(values, wf.dx);
  }
  return total;
}

}  // namespace halfwell
