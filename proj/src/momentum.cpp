#include "halfwell/momentum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>

#include "halfwell/error.hpp"
#include "halfwell/parallel.hpp"
#include "halfwell/quadrature.hpp"

namespace halfwell {

namespace {

using cplx = std::complex<double>;

const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);
constexpr int kShiftRungs = 9;

cplx eckart_potential(const PotentialSpec& spec, cplx z) {
  const cplx c = std::cosh(z / spec.a);
  return -spec.v0 / (c * c);
}

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  const auto mid = v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2);
  std::nth_element(v.begin(), mid, v.end());
  if (v.size() % 2 == 1) return *mid;
  const double upper = *mid;
  return 0.5 * (upper + *std::max_element(v.begin(), mid));
}

}  // namespace

double contour_shift(const PotentialSpec& spec) {
  if (spec.kind != WellKind::FullEckart) return 0.0;
  return 0.9 * std::numbers::pi * spec.a / 2.0;
}

std::vector<cplx> shifted_line_samples(const WaveFunction& wf, double sigma) {
  if (wf.left == LeftBranch::Exponential)
    throw DomainError("shifted_line_samples: needs a mirror-symmetric wavefunction");
  const std::size_t n = wf.samples.size() - 1;
  const double h = wf.dx;
  const double k = wf.state.k;
  const double e = wf.state.energy;
  const cplx shift(0.0, -sigma);

  // Far out V ~ 0 on both lines, so psi(z) ~ C e^{-kz} continues the real
  // samples: psi(X - i sigma) = psi(X) e^{i k sigma}.
  std::vector<cplx> g(n + 1);
  cplx u = wf.samples[n] * std::polar(1.0, k * sigma);
  cplx w = -k * u;
  g[n] = u;
  auto q = [&](double t) { return eckart_potential(wf.spec, t + shift) - e; };
  cplx q_hi = q(h * static_cast<double>(n));
  for (std::size_t i = n; i-- > 0;) {
    const double t1 = h * static_cast<double>(i + 1);
    const cplx q_mid = q(t1 - 0.5 * h);
    const cplx q_lo = q(t1 - h);
    const double s = -h;
    const cplx k1u = w, k1w = q_hi * u;
    const cplx k2u = w + 0.5 * s * k1w, k2w = q_mid * (u + 0.5 * s * k1u);
    const cplx k3u = w + 0.5 * s * k2w, k3w = q_mid * (u + 0.5 * s * k2u);
    const cplx k4u = w + s * k3w, k4w = q_lo * (u + s * k3u);
    u += s / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
    w += s / 6.0 * (k1w + 2.0 * k2w + 2.0 * k3w + k4w);
    q_hi = q_lo;
    g[i] = u;
  }
  return g;
}

double default_dp(double k) { return std::min(kDefaultDp, k / 5.0); }

MomentumDistribution transform(const WaveFunction& wf, const TransformOptions& options) {
  TransformOptions opts = options;
  if (opts.dp == 0.0) opts.dp = default_dp(wf.state.k);
  if (!(opts.p_max > 0.0) || !(opts.dp > 0.0))
    throw DomainError("transform: p_max and dp must be positive");
  if (opts.p_max * wf.dx > opts.filon_bound)
    throw DomainError("transform: p_max * dx exceeds the Filon stability bound");

  MomentumDistribution md;
  md.spec = wf.spec;
  md.state = wf.state;
  md.dp = opts.dp;
  const auto m = static_cast<std::size_t>(std::llround(opts.p_max / opts.dp));
  md.p_max = opts.dp * static_cast<double>(m);
  md.p.resize(2 * m + 1);
  md.phi.resize(2 * m + 1);
  md.intensity.resize(2 * m + 1);
  for (std::size_t i = 0; i <= 2 * m; ++i)
    md.p[i] = opts.dp * (static_cast<double>(i) - static_cast<double>(m));

  // Each shifted line amplifies integration error by max|psi| on it, and the
  // transform gains e^{-p sigma}. Every p takes the rung that minimises the
  // product, so low momenta stay on the real axis.
  const double sigma_max = contour_shift(wf.spec);
  std::vector<std::vector<cplx>> lines;
  std::vector<double> shifts, peaks;
  if (sigma_max > 0.0) {
    for (int r = 0; r <= kShiftRungs; ++r) {
      const double sigma = sigma_max * r / kShiftRungs;
      lines.push_back(r == 0 ? std::vector<cplx>(wf.samples.begin(), wf.samples.end())
                             : shifted_line_samples(wf, sigma));
      double peak = 0.0;
      for (const cplx& v : lines.back()) peak = std::max(peak, std::abs(v));
      shifts.push_back(sigma);
      peaks.push_back(peak);
    }
  }
  auto pick_rung = [&](double p) {
    std::size_t best = 0;
    for (std::size_t r = 1; r < shifts.size(); ++r)
      if (std::log(peaks[r]) - p * shifts[r] < std::log(peaks[best]) - p * shifts[best]) best = r;
    return best;
  };

  parallel_for(m + 1, [&](std::size_t j) {
    const double p = md.p[m + j];
    cplx phi;
    if (wf.left == LeftBranch::Exponential) {
      phi = wf.psi0 / cplx(wf.state.k, -p) + quad::filon(wf.samples, wf.dx, p);
    } else {
      cplx g;
      double sigma = 0.0;
      if (lines.empty()) {
        g = quad::filon(wf.samples, wf.dx, p);
      } else {
        const std::size_t r = pick_rung(p);
        g = quad::filon(lines[r], wf.dx, p);
        sigma = shifts[r];
      }
      const cplx sym = wf.left == LeftBranch::EvenMirror ? cplx(2.0 * g.real(), 0.0)
                                                         : cplx(0.0, 2.0 * g.imag());
      phi = std::exp(-p * sigma) * sym;
    }
    md.phi[m + j] = kInvSqrt2Pi * phi;
  });
  // psi real: phi(-p) = conj(phi(p)).
  for (std::size_t j = 1; j <= m; ++j) md.phi[m - j] = std::conj(md.phi[m + j]);
  for (std::size_t i = 0; i <= 2 * m; ++i) md.intensity[i] = std::norm(md.phi[i]);
  return md;
}

ParsevalCheck parseval(const MomentumDistribution& md) {
  const std::size_t m = md.zero_index();
  const std::span<const double> half(md.intensity.data() + m, m + 1);
  ParsevalCheck out;
  out.residual = std::abs(2.0 * quad::simpson(half, md.dp) - 1.0);
  std::vector<double> plateau;
  for (std::size_t i = m; i < md.p.size(); ++i)
    if (md.p[i] >= 0.75 * md.p_max) plateau.push_back(std::pow(md.p[i], 6) * md.intensity[i]);
  out.tail_estimate = 2.0 * median(std::move(plateau)) / (5.0 * std::pow(md.p_max, 5));
  return out;
}

double parseval_residual(const MomentumDistribution& md) { return parseval(md).residual; }

std::vector<WeightedRow> weighted_curves(const MomentumDistribution& md) {
  std::vector<WeightedRow> rows(md.p.size());
  for (std::size_t i = 0; i < md.p.size(); ++i) {
    const double p2 = md.p[i] * md.p[i];
    const double i2 = p2 * md.intensity[i];
    rows[i] = {md.p[i], i2, p2 * i2, p2 * p2 * i2};
  }
  return rows;
}

}  // namespace halfwell
