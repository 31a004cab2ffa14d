#pragma once

// Independent reference values for the unit and acceptance tests. Nothing
// here calls into the shooting code.

#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <vector>

#include "halfwell/model.hpp"

namespace oracle {

// Study parameters V0 = 15, a = 2 in units 2m = hbar = 1.
inline const std::map<halfwell::WellKind, std::vector<double>>& published() {
  using halfwell::WellKind;
  static const std::map<WellKind, std::vector<double>> table{
      {WellKind::HalfParabolic, {-10.6370, -3.9894}},
      {WellKind::HalfTriangular, {-8.1408, -1.8025}},
      {WellKind::HalfEckart, {-10.9628, -5.8470, -2.2641, -0.3400}},
      {WellKind::HalfExponential, {-3.9249}},
  };
  return table;
}

inline double bisect(const std::function<double(double)>& f, double lo, double hi) {
  double flo = f(lo);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Square well of width a on [0, a]. With q^2 = V0 + E, k^2 = -E and half
// width L = a/2: even states q tan(qL) = k, odd states -q cot(qL) = k.
// Each branch of tan or cot holds at most one root, found by bisection in q.
inline std::vector<double> square_well_levels(double v0, double a) {
  const double half = 0.5 * a;
  const double qmax = std::sqrt(v0);
  auto k_of = [v0](double q) { return std::sqrt(std::max(v0 - q * q, 0.0)); };
  std::vector<double> energies;
  const double branch = std::numbers::pi / 2.0 / half;  // spacing of tan/cot branches in q
  for (int j = 0; j * branch < qmax; ++j) {
    const double lo = j * branch + 1e-12;
    const double hi = std::min((j + 1) * branch - 1e-12, qmax);
    std::function<double(double)> f;
    if (j % 2 == 0)
      f = [&](double q) { return q * std::tan(q * half) - k_of(q); };
    else
      f = [&](double q) { return -q / std::tan(q * half) - k_of(q); };
    if ((f(lo) < 0.0) == (f(hi) < 0.0)) continue;
    const double q = bisect(f, lo, hi);
    energies.push_back(q * q - v0);
  }
  return energies;
}

// sech^2 well -V0 sech^2(x/a): E_n = -(s - n)^2 / a^2 for n < s, with
// s(s + 1) = V0 a^2.
inline double eckart_s(double v0, double a) { return 0.5 * (-1.0 + std::sqrt(1.0 + 4.0 * v0 * a * a)); }

inline std::vector<double> eckart_levels(double v0, double a) {
  const double s = eckart_s(v0, a);
  std::vector<double> energies;
  for (int n = 0; n < s; ++n) energies.push_back(-(s - n) * (s - n) / (a * a));
  return energies;
}

// Attractive delta of strength lambda: psi = sqrt(k) e^{-k|x|}, k = lambda/2.
inline double delta_phi(double lambda, double p) {
  const double k = 0.5 * lambda;
  return std::sqrt(2.0 / std::numbers::pi) * std::pow(k, 1.5) / (k * k + p * p);
}

// 2 \int_0^P p^4 I dp for the lambda = 2 delta well.
inline double delta_m4(double p) {
  return 4.0 / std::numbers::pi * (p - 1.5 * std::atan(p) + p / (2.0 * (1.0 + p * p)));
}

inline double central_difference(const std::function<double(double)>& f, double x, double h = 1e-6) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace oracle
