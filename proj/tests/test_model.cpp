#include <doctest.h>

#include <cmath>
#include <limits>

#include "halfwell/error.hpp"
#include "halfwell/model.hpp"
#include "oracles.hpp"

using namespace halfwell;

namespace {

PotentialSpec well(WellKind kind) {
  PotentialSpec s;
  s.kind = kind;
  return s;
}

}  // namespace

TEST_SUITE("model") {
  TEST_CASE("potential values at reference points") {
    CHECK(potential_value(well(WellKind::HalfParabolic), -1.0) == 0.0);
    CHECK(potential_value(well(WellKind::HalfParabolic), 2.0) == doctest::Approx(0.0));
    CHECK(potential_value(well(WellKind::HalfExponential), 0.0) == doctest::Approx(-15.0));
    CHECK(potential_value(well(WellKind::FiniteSquareWell), 1.0) == doctest::Approx(-15.0));
    CHECK(potential_value(well(WellKind::FiniteSquareWell), 3.0) == 0.0);
    CHECK(potential_value(well(WellKind::FullEckart), 0.0) == doctest::Approx(-15.0));
    CHECK(potential_value(well(WellKind::DeltaWell), 0.5) == 0.0);
  }

  TEST_CASE("half wells vanish on the left and jump at the origin") {
    for (WellKind kind : all_kinds()) {
      if (!is_half_well(kind)) continue;
      const PotentialSpec s = well(kind);
      CAPTURE(model_name(kind));
      CHECK(potential_value(s, -0.3) == 0.0);
      CHECK(piece_value(s, 0.0, 1e-3) == doctest::Approx(-s.v0));
    }
  }

  TEST_CASE("potential rejects bad abscissae") {
    CHECK_THROWS_AS(potential_value(well(WellKind::DeltaWell), 0.0), DomainError);
    CHECK_THROWS_AS(potential_value(well(WellKind::HalfEckart), std::nan("")), DomainError);
    CHECK_THROWS_AS(potential_value(well(WellKind::HalfEckart), std::numeric_limits<double>::infinity()),
                    DomainError);
  }

  TEST_CASE("smooth derivative") {
    CHECK(smooth_derivative(well(WellKind::HalfTriangular), 1.0) == doctest::Approx(7.5));
    CHECK(smooth_derivative(well(WellKind::HalfParabolic), 1.0) == doctest::Approx(7.5));
    for (WellKind kind : {WellKind::HalfEckart, WellKind::HalfExponential, WellKind::FullEckart,
                          WellKind::HalfParabolic}) {
      const PotentialSpec s = well(kind);
      for (double x : {0.3, 0.7, 1.4}) {
        const double fd = oracle::central_difference([&](double t) { return potential_value(s, t); }, x);
        CAPTURE(model_name(kind));
        CAPTURE(x);
        CHECK(smooth_derivative(s, x) == doctest::Approx(fd).epsilon(1e-6));
      }
    }
    CHECK_THROWS_AS(smooth_derivative(well(WellKind::HalfEckart), 0.0), DomainError);
    CHECK_THROWS_AS(smooth_derivative(well(WellKind::FiniteSquareWell), 2.0), DomainError);
    CHECK(smooth_derivative(well(WellKind::FullEckart), 0.0) == doctest::Approx(0.0));
  }

  TEST_CASE("continuity classes") {
    for (WellKind kind : {WellKind::HalfParabolic, WellKind::HalfTriangular, WellKind::HalfEckart,
                          WellKind::HalfExponential, WellKind::FiniteSquareWell}) {
      const ContinuityClass c = classify(well(kind));
      CHECK(c.cls == Continuity::JumpDiscontinuous);
      CHECK(c.predicted_tail_exponent == -6);
      CHECK(c.first_divergent_even_moment == 6);
    }
    const ContinuityClass d = classify(well(WellKind::DeltaWell));
    CHECK(d.cls == Continuity::DeltaSingular);
    CHECK(d.predicted_tail_exponent == -4);
    CHECK(d.first_divergent_even_moment == 4);
    const ContinuityClass e = classify(well(WellKind::FullEckart));
    CHECK(e.cls == Continuity::Smooth);
    CHECK_FALSE(e.predicted_tail_exponent.has_value());
    CHECK_FALSE(e.first_divergent_even_moment.has_value());
  }

  TEST_CASE("energy floor") {
    CHECK(energy_floor(well(WellKind::HalfParabolic)) == doctest::Approx(-15.0));
    CHECK(energy_floor(well(WellKind::HalfExponential)) == doctest::Approx(-15.0));
    CHECK(energy_floor(well(WellKind::DeltaWell)) == doctest::Approx(-1.0));
  }

  TEST_CASE("domain cutoff") {
    CHECK(domain_cutoff(well(WellKind::FiniteSquareWell), -1.0) >= 37.0);
    const double x = domain_cutoff(well(WellKind::HalfEckart), -0.34);
    CHECK(x >= 35.0 / std::sqrt(0.34));
    CHECK(std::exp(-std::sqrt(0.34) * x) < 1e-15);
    // Rising wall: finite and past the classical turning point a(1 + E/V0).
    const double xt = domain_cutoff(well(WellKind::HalfTriangular), -8.1408);
    CHECK(std::isfinite(xt));
    CHECK(xt > 2.0 * (1.0 - 8.1408 / 15.0));
    CHECK(domain_cutoff(well(WellKind::HalfTriangular), -8.1408, 70.0) > xt);
  }

  TEST_CASE("validation messages") {
    PotentialSpec s = well(WellKind::HalfParabolic);
    s.v0 = 0.0;
    CHECK_THROWS_WITH_AS(validate(s), "v0 must be positive", InvalidSpec);
    s = well(WellKind::HalfEckart);
    s.a = -1.0;
    CHECK_THROWS_WITH_AS(validate(s), "a must be positive", InvalidSpec);
    s = well(WellKind::DeltaWell);
    s.lambda = 0.0;
    CHECK_THROWS_WITH_AS(validate(s), "lambda must be positive", InvalidSpec);
    s.lambda = std::nan("");
    CHECK_THROWS_AS(validate(s), InvalidSpec);
  }

  TEST_CASE("model names round-trip") {
    for (WellKind kind : all_kinds()) CHECK(parse_model_name(model_name(kind)) == kind);
    CHECK(model_name(WellKind::FiniteSquareWell) == "fsw");
    CHECK_THROWS_AS(parse_model_name("half-quartic"), InvalidSpec);
    CHECK(all_kinds().size() == 7);
  }

  TEST_CASE("square well breakpoint") {
    const auto b = interior_breakpoints(well(WellKind::FiniteSquareWell));
    REQUIRE(b.size() == 1);
    CHECK(b[0] == 2.0);
    CHECK(interior_breakpoints(well(WellKind::HalfEckart)).empty());
  }
}
