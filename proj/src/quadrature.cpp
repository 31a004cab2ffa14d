#include "halfwell/quadrature.hpp"

#include <cmath>
#include <cstddef>

#include "halfwell/error.hpp"

namespace halfwell::quad {

double simpson(std::span<const double> f, double h) {
  const std::size_t n = f.size();
  if (n < 2) return 0.0;
  if (n == 2) return 0.5 * h * (f[0] + f[1]);
  std::size_t intervals = n - 1;
  double tail = 0.0;
  if (intervals % 2 == 1) {
    const std::size_t j = n - 4;
    tail = 3.0 * h / 8.0 * (f[j] + 3.0 * f[j + 1] + 3.0 * f[j + 2] + f[j + 3]);
    intervals -= 3;
  }
  if (intervals == 0) return tail;
  double odd = 0.0, even = 0.0;
  for (std::size_t i = 1; i < intervals; i += 2) odd += f[i];
  for (std::size_t i = 2; i < intervals; i += 2) even += f[i];
  return h / 3.0 * (f[0] + 4.0 * odd + 2.0 * even + f[intervals]) + tail;
}

FilonMoments filon_moments(double theta) {
  using C = std::complex<double>;
  const double t = std::abs(theta);
  if (t < 1.0) {
    // Power series; the closed forms cancel catastrophically near 0.
    // \int t^n (-i theta t)^m / m! over [-1, 1] is nonzero only for n + m even.
    C m[3] = {0.0, 0.0, 0.0};
    C term = 1.0;  // (-i theta)^j / j!
    for (int j = 0; j < 40; ++j) {
      for (int n = 0; n < 3; ++n)
        if ((n + j) % 2 == 0) m[n] += term * (2.0 / (n + j + 1));
      term *= C(0.0, -theta) / double(j + 1);
    }
    return {m[0], m[1], m[2]};
  }
  const double s = std::sin(theta), c = std::cos(theta);
  const double th2 = theta * theta;
  return {
      C(2.0 * s / theta, 0.0),
      C(0.0, -2.0 * (s - theta * c) / th2),
      C(2.0 * ((th2 - 2.0) * s + 2.0 * theta * c) / (th2 * theta), 0.0),
  };
}

namespace {

template <typename T>
std::complex<double> filon_impl(std::span<const T> f, double h, double p) {
  using C = std::complex<double>;
  const std::size_t n = f.size();
  if (n < 3 || (n - 1) % 2 != 0)
    throw DomainError("filon: need an even number (>= 2) of intervals");
  const auto [m0, m1, m2] = filon_moments(p * h);
  // Weights on (left, centre, right) samples of a panel of half-width h.
  const C wl = 0.5 * (m2 - m1);
  const C wc = m0 - m2;
  const C wr = 0.5 * (m2 + m1);

  const std::size_t panels = (n - 1) / 2;
  const C rot = std::polar(1.0, -2.0 * p * h);
  constexpr std::size_t kReanchor = 128;
  C sum = 0.0;
  C phase = 0.0;
  for (std::size_t j = 0; j < panels; ++j) {
    if (j % kReanchor == 0)
      phase = std::polar(1.0, -p * h * double(2 * j + 1));
    else
      phase *= rot;
    const std::size_t i = 2 * j;
    sum += phase * (wl * f[i] + wc * f[i + 1] + wr * f[i + 2]);
  }
  return h * sum;
}

}  // namespace

std::complex<double> filon(std::span<const double> f, double h, double p) {
  return filon_impl(f, h, p);
}

std::complex<double> filon(std::span<const std::complex<double>> f, double h, double p) {
  return filon_impl(f, h, p);
}

}  // namespace halfwell::quad
