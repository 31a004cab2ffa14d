#include "halfwell/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>

#include "halfwell/error.hpp"
#include "halfwell/quadrature.hpp"

namespace halfwell {

namespace {

constexpr double kDivergentRatio = 0.5;
constexpr double kConvergentRatio = 0.2;

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  const auto mid = v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2);
  std::nth_element(v.begin(), mid, v.end());
  if (v.size() % 2 == 1) return *mid;
  return 0.5 * (*mid + *std::max_element(v.begin(), mid));
}

std::size_t grid_index(const MomentumDistribution& md, double p) {
  const double offset = p / md.dp;
  return md.zero_index() + static_cast<std::size_t>(std::llround(offset));
}

// Median of p^power I(p) over grid points in [lo, hi].
double weighted_median(const MomentumDistribution& md, double power, double lo, double hi) {
  std::vector<double> v;
  for (std::size_t i = md.zero_index(); i < md.p.size(); ++i)
    if (md.p[i] >= lo && md.p[i] <= hi) v.push_back(std::pow(md.p[i], power) * md.intensity[i]);
  return median(std::move(v));
}

// \int over the full grid of p^order I, any integer order.
double full_moment(const MomentumDistribution& md, int order) {
  std::vector<double> f(md.p.size());
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = std::pow(md.p[i], order) * md.intensity[i];
  return quad::simpson(f, md.dp);
}

}  // namespace

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Convergent:
      return "Convergent";
    case Verdict::Divergent:
      return "Divergent";
    case Verdict::Indeterminate:
      break;
  }
  return "Indeterminate";
}

double p2_position(const WaveFunction& wf, const PotentialSpec& spec) {
  if (spec.kind == WellKind::DeltaWell)
    return wf.state.energy + spec.lambda * wf.psi0 * wf.psi0;
  const double right = integrate_right(wf, [](double, double psi, double v) { return v * psi * psi; });
  // V = 0 on the exponential branch; mirrored wells contribute twice.
  const double v_mean = wf.left == LeftBranch::Exponential ? right : 2.0 * right;
  return wf.state.energy - v_mean;
}

double p4_position(const WaveFunction& wf, const PotentialSpec& spec) {
  if (spec.kind == WellKind::DeltaWell)
    throw DivergentMoment("<p^4> diverges for the delta well");
  const double e = wf.state.energy;
  const double right = integrate_right(wf, [e](double, double psi, double v) {
    const double d = e - v;
    return d * d * psi * psi;
  });
  if (wf.left == LeftBranch::Exponential) return right + e * e * left_mass(wf);
  return 2.0 * right;
}

double partial_moment(const MomentumDistribution& md, int order, double cutoff) {
  if (order < 0 || order > 6 || order % 2 != 0)
    throw DomainError("partial_moment: order must be 0, 2, 4 or 6");
  if (cutoff < 0.0 || cutoff > md.p_max * (1.0 + 1e-12))
    throw DomainError("partial_moment: cutoff outside [0, p_max]");
  const std::size_t m = md.zero_index();
  const std::size_t end = grid_index(md, cutoff);
  if (end == m) return 0.0;
  std::vector<double> f(end - m + 1);
  for (std::size_t i = m; i <= end; ++i) f[i - m] = std::pow(md.p[i], order) * md.intensity[i];
  return 2.0 * quad::simpson(f, md.dp);
}

double moment_tail(const MomentumDistribution& md, int order, double cutoff) {
  const auto alpha = classify(md.spec).predicted_tail_exponent;
  if (!alpha) return 0.0;
  const double exponent = order + *alpha + 1;
  if (exponent >= 0.0) return std::numeric_limits<double>::infinity();
  const double c = weighted_median(md, -*alpha, 0.2 * md.p_max, 0.75 * md.p_max);
  return 2.0 * c * std::pow(cutoff, exponent) / (-exponent);
}

DivergenceReport divergence_verdict(const MomentumDistribution& md, int order,
                                    const std::vector<double>& cutoffs) {
  if (cutoffs.size() != 4) throw DomainError("divergence_verdict: need exactly four cutoffs");
  const double spacing = cutoffs[1] - cutoffs[0];
  for (std::size_t i = 1; i < 4; ++i) {
    const double d = cutoffs[i] - cutoffs[i - 1];
    if (!(d > 0.0) || std::abs(d - spacing) > 1e-9 * spacing)
      throw DomainError("divergence_verdict: cutoffs must be increasing and equally spaced");
  }

  DivergenceReport r;
  r.order = order;
  r.cutoffs = cutoffs;
  for (double c : cutoffs) r.partials.push_back(partial_moment(md, order, c));
  const double early = r.partials[1] - r.partials[0];
  const double late = r.partials[3] - r.partials[2];
  if (early > 0.0)
    r.growth_ratio = late / early;
  else
    r.growth_ratio = late > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;

  if (r.growth_ratio > kDivergentRatio) {
    r.verdict = Verdict::Divergent;
    // Least-squares slope of M against P.
    double mean_p = 0.0, mean_m = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
      mean_p += cutoffs[i] / 4.0;
      mean_m += r.partials[i] / 4.0;
    }
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
      sxy += (cutoffs[i] - mean_p) * (r.partials[i] - mean_m);
      sxx += (cutoffs[i] - mean_p) * (cutoffs[i] - mean_p);
    }
    r.linear_rate = sxy / sxx;
  } else if (r.growth_ratio < kConvergentRatio) {
    r.verdict = Verdict::Convergent;
    const double tail = moment_tail(md, order, cutoffs.back());
    r.limit_estimate = r.partials.back() + (std::isfinite(tail) ? tail : 0.0);
  } else {
    r.verdict = Verdict::Indeterminate;
  }
  return r;
}

TailFit tail_exponent(const MomentumDistribution& md, double p_lo, double p_hi) {
  if (p_lo < 20.0) throw DomainError("tail_exponent: window must start at p >= 20");
  if (!(p_hi > p_lo) || p_hi > md.p_max * (1.0 + 1e-12))
    throw DomainError("tail_exponent: window outside (20, p_max]");
  std::vector<double> lx, ly, p6;
  for (std::size_t i = md.zero_index(); i < md.p.size(); ++i) {
    const double p = md.p[i];
    if (p < p_lo || p > p_hi) continue;
    const double v = md.intensity[i];
    if (!(v > 0.0))
      throw DomainError("tail_exponent: I(p) <= 0 in window (noise floor reached)");
    lx.push_back(std::log(p));
    ly.push_back(std::log(v));
    p6.push_back(std::pow(p, 6) * v);
  }
  if (lx.size() < 50) throw DomainError("tail_exponent: fewer than 50 points in window");

  const double n = static_cast<double>(lx.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  TailFit fit;
  fit.p_lo = p_lo;
  fit.p_hi = p_hi;
  fit.points = lx.size();
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r2 = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  fit.plateau_c6 = median(std::move(p6));
  return fit;
}

EhrenfestReport ehrenfest(const WaveFunction& wf, const PotentialSpec& spec) {
  EhrenfestReport r;
  if (spec.kind == WellKind::DeltaWell) {
    // V' = 2 delta(x)/x against an even psi^2: odd integrand.
    r.exact_by_symmetry = true;
    return r;
  }
  const double psi0_sq = wf.psi0 * wf.psi0;
  if (spec.kind == WellKind::FiniteSquareWell) {
    const auto ia = static_cast<std::size_t>(std::llround(spec.a / wf.dx));
    const double psia_sq = wf.samples.at(ia) * wf.samples.at(ia);
    r.boundary = spec.v0 * (psi0_sq - psia_sq);
    r.residual = r.boundary;
    r.relative = std::abs(r.residual) / (spec.v0 * std::max(psi0_sq, psia_sq));
    r.endpoint_gap = std::abs(psi0_sq - psia_sq);
    return r;
  }

  const double mid = 0.5 * wf.x_max();
  const double right = integrate_right(wf, [&spec, mid](double x, double psi, double) {
    return piece_derivative(spec, x, mid) * psi * psi;
  });
  if (spec.kind == WellKind::FullEckart) {
    // V' is odd and psi^2 even: the left half cancels the right exactly.
    r.interior = right;
    r.boundary = -right;
    r.exact_by_symmetry = true;
    return r;
  }
  r.interior = -right;  // U' = -V' on x > 0
  r.boundary = spec.v0 * psi0_sq;
  r.residual = -r.interior - r.boundary;
  r.relative = std::abs(r.residual) / std::max(std::abs(r.interior), std::abs(r.boundary));
  return r;
}

CrossRepresentation cross_representation(const WaveFunction& wf, const MomentumDistribution& md) {
  CrossRepresentation c;
  const PotentialSpec& spec = wf.spec;
  c.p2_position = p2_position(wf, spec);
  c.p2_momentum = partial_moment(md, 2, md.p_max) + moment_tail(md, 2, md.p_max);
  c.p2_relative = std::abs(c.p2_position - c.p2_momentum) / std::abs(c.p2_position);
  if (spec.kind != WellKind::DeltaWell) {
    c.p4_position = p4_position(wf, spec);
    c.p4_momentum_corrected = partial_moment(md, 4, md.p_max) + moment_tail(md, 4, md.p_max);
    c.p4_relative = std::abs(*c.p4_position - *c.p4_momentum_corrected) / std::abs(*c.p4_position);
  }
  c.p1 = full_moment(md, 1);
  c.p3 = full_moment(md, 3);
  return c;
}

}  // namespace halfwell
