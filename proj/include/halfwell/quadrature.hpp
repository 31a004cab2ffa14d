#pragma once

#include <complex>
#include <span>

namespace halfwell::quad {

/// Composite Simpson rule over uniformly spaced samples. An odd number of
/// intervals is closed with the 3/8 rule on the last three; two samples fall
/// back to the trapezoid.
double simpson(std::span<const double> f, double h);

/// Integrals M_n(theta) = \int_{-1}^{1} t^n e^{-i theta t} dt for n = 0, 1, 2.
struct FilonMoments {
  std::complex<double> m0, m1, m2;
};
FilonMoments filon_moments(double theta);

/// \int_0^{N h} f(x) e^{-i p x} dx from samples f_j = f(j h), j = 0..N, N
/// even, by integrating the panelwise quadratic interpolant exactly.
std::complex<double> filon(std::span<const double> f, double h, double p);
std::complex<double> filon(std::span<const std::complex<double>> f, double h, double p);

}  // namespace halfwell::quad
