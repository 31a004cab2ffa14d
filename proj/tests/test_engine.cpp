#include <doctest.h>

#include <cmath>

#include "halfwell/engine.hpp"
#include "halfwell/error.hpp"
#include "oracles.hpp"

using namespace halfwell;

namespace {

PotentialSpec well(WellKind kind) {
  PotentialSpec s;
  s.kind = kind;
  return s;
}

}  // namespace

TEST_SUITE("engine") {
  TEST_CASE("grid step snaps so that x = a is an even grid index") {
    const PotentialSpec s = well(WellKind::FiniteSquareWell);
    CHECK(default_dx(s) == doctest::Approx(1e-3));
    const double dx = snapped_dx(s, 0.0013);
    const double m = s.a / dx;
    CHECK(std::abs(m - std::round(m)) < 1e-9);
    CHECK(static_cast<long>(std::llround(m)) % 2 == 0);
    const ShotResult shot = integrate_inward(s, -10.0, 0.0013);
    CHECK((shot.psi.size() - 1) % 2 == 0);
  }

  TEST_CASE("square-well shot matches the interior cosine") {
    const PotentialSpec s = well(WellKind::FiniteSquareWell);
    const double e0 = oracle::square_well_levels(s.v0, s.a).front();
    const ShotResult shot = integrate_inward(s, e0, default_dx(s));
    const double q = std::sqrt(s.v0 + e0);
    // Ground state: psi = A cos(q (x - a/2)) inside, so psi'/psi at 0 is q tan(q a/2).
    CHECK(shot.dpsi0 / shot.psi0 == doctest::Approx(q * std::tan(0.5 * q * s.a)).epsilon(1e-8));
    CHECK(shot.dpsi0 / shot.psi0 == doctest::Approx(std::sqrt(-e0)).epsilon(1e-8));
  }

  TEST_CASE("half-Eckart shot at the reference ground level") {
    const PotentialSpec s = well(WellKind::HalfEckart);
    const double e = -10.9628;
    const ShotResult shot = integrate_inward(s, e, 1e-3);
    CHECK(std::abs(shot.dpsi0 - std::sqrt(-e) * shot.psi0) < 1e-3);
    double peak = 0.0;
    for (double v : shot.psi) peak = std::max(peak, std::abs(v));
    CHECK(peak == doctest::Approx(1.0));
    CHECK(std::abs(shot.psi.back()) < 1e-14);
  }

  TEST_CASE("rising wall decays below 1e-14 at the domain end") {
    const ShotResult shot = integrate_inward(well(WellKind::HalfTriangular), -8.1408, 1e-3);
    CHECK(std::abs(shot.psi.back()) < 1e-14);
  }

  TEST_CASE("psi(0) converges at fourth order in dx") {
    const PotentialSpec s = well(WellKind::HalfParabolic);
    auto slope = [&](double dx) {
      const ShotResult r = integrate_inward(s, -10.637, dx);
      return r.dpsi0 / r.psi0;
    };
    const double h = 0.04;
    const double ratio = std::abs(slope(h) - slope(h / 2)) / std::abs(slope(h / 2) - slope(h / 4));
    CHECK(ratio == doctest::Approx(16.0).epsilon(0.2));
  }

  TEST_CASE("matching residual vanishes near reference levels") {
    CHECK(std::abs(matching_residual(well(WellKind::HalfParabolic), -10.6370, 1e-3)) < 1e-3);
    CHECK(std::abs(matching_residual(well(WellKind::HalfTriangular), -8.1408, 1e-3)) < 1e-3);
  }

  TEST_CASE("residual scan of the half-parabolic well has two sign changes") {
    const PotentialSpec s = well(WellKind::HalfParabolic);
    const double d = 1e-6 * s.v0;
    const double lo = -s.v0 + d, hi = -d;
    int changes = 0;
    double last = matching_residual(s, lo, 2e-3);
    for (int i = 1; i < 400; ++i) {
      const double r = matching_residual(s, lo + (hi - lo) * i / 399.0, 2e-3);
      if ((r < 0.0) != (last < 0.0)) ++changes;
      last = r;
    }
    CHECK(changes == 2);
    // The sign just above E0 is opposite to the sign midway between the levels.
    const double above = matching_residual(s, -10.6370 + 0.05, 1e-3);
    const double mid = matching_residual(s, 0.5 * (-10.6370 - 3.9894), 1e-3);
    CHECK((above < 0.0) == (mid < 0.0));
    const double below = matching_residual(s, -10.6370 - 0.05, 1e-3);
    CHECK((below < 0.0) != (above < 0.0));
  }

  TEST_CASE("node counts follow the oscillation theorem") {
    const PotentialSpec s = well(WellKind::HalfParabolic);
    CHECK(count_nodes(integrate_inward(s, -10.6370, 1e-3)) == 0);
    CHECK(count_nodes(integrate_inward(s, -3.9894, 1e-3)) == 1);
    for (double e : {-9.0, -7.0, -5.0}) {
      const int n = count_nodes(integrate_inward(s, e, 1e-3));
      CHECK(n >= 0);
      CHECK(n <= 1);
    }
    const int above = count_nodes(integrate_inward(s, -2.0, 1e-3));
    CHECK(above >= 1);
    CHECK(above <= 2);
  }

  TEST_CASE("full-Eckart residual is the mirror Wronskian") {
    const PotentialSpec s = well(WellKind::FullEckart);
    const double e0 = oracle::eckart_levels(s.v0, s.a)[0];
    const ShotResult shot = integrate_inward(s, e0, 1e-3);
    CHECK(matching_residual(s, shot) == doctest::Approx(2.0 * shot.psi0 * shot.dpsi0));
    CHECK(std::abs(shot.dpsi0) < 1e-6);
  }

  TEST_CASE("engine rejects bad input") {
    CHECK_THROWS_AS(integrate_inward(well(WellKind::DeltaWell), -1.0, 1e-3), DomainError);
    CHECK_THROWS_AS(integrate_inward(well(WellKind::HalfParabolic), -5.0, 0.0), DomainError);
    CHECK_THROWS_AS(integrate_inward(well(WellKind::HalfEckart), 0.5, 1e-3), DomainError);
  }
}
