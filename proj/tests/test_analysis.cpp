#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fixtures.hpp"
#include "halfwell/error.hpp"
#include "oracles.hpp"

using namespace halfwell;

namespace {

const std::vector<WellKind> kJumpWells{WellKind::HalfParabolic, WellKind::HalfTriangular,
                                       WellKind::HalfEckart, WellKind::HalfExponential,
                                       WellKind::FiniteSquareWell};

// I = p^{-alpha} on a grid, for verdict thresholds.
MomentumDistribution power_law(double alpha) {
  MomentumDistribution md = fixture::momentum(WellKind::HalfParabolic, 0);
  for (std::size_t i = 0; i < md.p.size(); ++i) {
    const double p = std::max(std::abs(md.p[i]), 1.0);
    md.intensity[i] = std::pow(p, -alpha);
  }
  return md;
}

}  // namespace

TEST_SUITE("analysis") {
  TEST_CASE("<p^2> of the delta well") {
    const WaveFunction& wf = fixture::wavefunction(WellKind::DeltaWell, 0);
    CHECK(p2_position(wf, wf.spec) == doctest::Approx(1.0).epsilon(1e-12));
    const CrossRepresentation c = cross_representation(wf, fixture::momentum(WellKind::DeltaWell, 0));
    CHECK(std::abs(c.p2_momentum - 1.0) < 1e-4);
    CHECK_FALSE(c.p4_position.has_value());
    CHECK_THROWS_AS(p4_position(wf, wf.spec), DivergentMoment);
  }

  TEST_CASE("both representations agree for every state") {
    for (WellKind kind : all_kinds()) {
      for (std::size_t n = 0; n < fixture::states(kind).size(); ++n) {
        const WaveFunction& wf = fixture::wavefunction(kind, n);
        const CrossRepresentation c = cross_representation(wf, fixture::momentum(kind, n));
        CAPTURE(model_name(kind));
        CAPTURE(n);
        CHECK(c.p2_position > 0.0);
        CHECK(c.p2_relative < 1e-3);
        if (c.p4_relative) CHECK(*c.p4_relative < 2e-2);
        CHECK(std::abs(c.p1) < 1e-10);
        CHECK(std::abs(c.p3) < 1e-10);
      }
    }
  }

  TEST_CASE("smooth well needs no tail correction") {
    const MomentumDistribution& md = fixture::momentum(WellKind::FullEckart, 0);
    const double m100 = partial_moment(md, 4, 100.0);
    const double m200 = partial_moment(md, 4, 200.0);
    CHECK(std::abs(m200 - m100) / m200 < 1e-6);
    CHECK(moment_tail(md, 4, 200.0) == 0.0);
    const WaveFunction& wf = fixture::wavefunction(WellKind::FullEckart, 0);
    CHECK(p4_position(wf, wf.spec) == doctest::Approx(m200).epsilon(1e-6));
  }

  TEST_CASE("partial moments") {
    const MomentumDistribution& delta = fixture::momentum(WellKind::DeltaWell, 0);
    for (double p : {40.0, 100.0, 200.0})
      CHECK(partial_moment(delta, 4, p) == doctest::Approx(oracle::delta_m4(p)).epsilon(1e-6));
    CHECK(partial_moment(delta, 2, 0.0) == 0.0);
    CHECK_THROWS_AS(partial_moment(delta, 3, 10.0), DomainError);
    CHECK_THROWS_AS(partial_moment(delta, 2, 300.0), DomainError);
    for (WellKind kind : kJumpWells) {
      const MomentumDistribution& md = fixture::momentum(kind, 0);
      const double m100 = partial_moment(md, 2, 100.0);
      const double m200 = partial_moment(md, 2, 200.0);
      CAPTURE(model_name(kind));
      CHECK((m200 - m100) / m200 < 1e-5);
      CHECK(partial_moment(md, 0, 200.0) == doctest::Approx(1.0).epsilon(1e-4));
    }
  }

  TEST_CASE("classification verdicts") {
    for (WellKind kind : kJumpWells) {
      const MomentumDistribution& md = fixture::momentum(kind, 0);
      const DivergenceReport m4 = divergence_verdict(md, 4);
      const DivergenceReport m6 = divergence_verdict(md, 6);
      const TailFit fit = tail_exponent(md);
      CAPTURE(model_name(kind));
      CHECK(m4.verdict == Verdict::Convergent);
      CHECK(m4.limit_estimate.has_value());
      CHECK(m6.verdict == Verdict::Divergent);
      REQUIRE(m6.linear_rate.has_value());
      // Both measure the p^-6 coefficient.
      CHECK(*m6.linear_rate == doctest::Approx(2.0 * fit.plateau_c6).epsilon(0.1));
      for (std::size_t i = 1; i < m6.partials.size(); ++i) CHECK(m6.partials[i] >= m6.partials[i - 1]);
    }
    const DivergenceReport delta = divergence_verdict(fixture::momentum(WellKind::DeltaWell, 0), 4);
    CHECK(delta.verdict == Verdict::Divergent);
    REQUIRE(delta.linear_rate.has_value());
    CHECK(*delta.linear_rate == doctest::Approx(4.0 / std::numbers::pi).epsilon(0.01));
    const DivergenceReport smooth = divergence_verdict(fixture::momentum(WellKind::FullEckart, 0), 6);
    CHECK(smooth.verdict == Verdict::Convergent);
  }

  TEST_CASE("verdict thresholds on synthetic power laws") {
    CHECK(divergence_verdict(power_law(6.0), 6).verdict == Verdict::Divergent);
    CHECK(divergence_verdict(power_law(8.0), 6).verdict == Verdict::Convergent);
    const DivergenceReport log_growth = divergence_verdict(power_law(7.0), 6);
    CHECK(log_growth.growth_ratio == doctest::Approx(std::log(160.0 / 120.0) / std::log(2.0)).epsilon(1e-3));
    CHECK(log_growth.verdict == Verdict::Indeterminate);
    CHECK_FALSE(log_growth.limit_estimate.has_value());
    CHECK_FALSE(log_growth.linear_rate.has_value());
    CHECK(verdict_name(Verdict::Indeterminate) == "Indeterminate");
  }

  TEST_CASE("cutoffs must be four and equally spaced") {
    const MomentumDistribution& md = fixture::momentum(WellKind::HalfParabolic, 0);
    CHECK_THROWS_AS(divergence_verdict(md, 6, {40.0, 80.0, 120.0}), DomainError);
    CHECK_THROWS_AS(divergence_verdict(md, 6, {40.0, 80.0, 130.0, 160.0}), DomainError);
    CHECK_THROWS_AS(divergence_verdict(md, 6, {40.0, 80.0, 120.0, 260.0}), DomainError);
    CHECK_NOTHROW(divergence_verdict(md, 6, {20.0, 60.0, 100.0, 140.0}));
  }

  TEST_CASE("tail exponents") {
    for (WellKind kind : kJumpWells) {
      const TailFit fit = tail_exponent(fixture::momentum(kind, 0));
      CAPTURE(model_name(kind));
      CHECK(std::abs(fit.slope + 6.0) < 0.3);
      CHECK(fit.points >= 50);
      CHECK(fit.plateau_c6 > 0.0);
    }
    const TailFit delta = tail_exponent(fixture::momentum(WellKind::DeltaWell, 0));
    CHECK(std::abs(delta.slope + 4.0) < 0.05);
    CHECK(delta.r2 > 0.999);
    const MomentumDistribution& smooth = fixture::momentum(WellKind::FullEckart, 0);
    CHECK(tail_exponent(smooth, 20.0, 60.0).slope < -12.0);
    CHECK_THROWS_AS(tail_exponent(smooth), DomainError);  // I underflows inside [40, 150]
    const MomentumDistribution& md = fixture::momentum(WellKind::HalfParabolic, 0);
    CHECK_THROWS_AS(tail_exponent(md, 10.0, 100.0), DomainError);
    CHECK_THROWS_AS(tail_exponent(md, 40.0, 41.0), DomainError);
    CHECK_THROWS_AS(tail_exponent(md, 40.0, 250.0), DomainError);
  }

  TEST_CASE("Ehrenfest balance") {
    for (WellKind kind : all_kinds()) {
      if (!is_half_well(kind)) continue;
      for (std::size_t n = 0; n < fixture::states(kind).size(); ++n) {
        const EhrenfestReport r = ehrenfest(fixture::wavefunction(kind, n), fixture::study(kind));
        CAPTURE(model_name(kind));
        CAPTURE(n);
        CHECK(r.relative < 1e-3);
        CHECK(r.boundary > 0.0);
        CHECK(-r.interior == doctest::Approx(r.boundary).epsilon(1e-3));
      }
    }
    for (std::size_t n = 0; n < fixture::states(WellKind::FiniteSquareWell).size(); ++n) {
      const EhrenfestReport r = ehrenfest(fixture::wavefunction(WellKind::FiniteSquareWell, n),
                                          fixture::study(WellKind::FiniteSquareWell));
      REQUIRE(r.endpoint_gap.has_value());
      CHECK(*r.endpoint_gap < 1e-8);
    }
    const EhrenfestReport delta = ehrenfest(fixture::wavefunction(WellKind::DeltaWell, 0),
                                            fixture::study(WellKind::DeltaWell));
    CHECK(delta.exact_by_symmetry);
    CHECK(delta.residual == 0.0);
    const EhrenfestReport smooth = ehrenfest(fixture::wavefunction(WellKind::FullEckart, 0),
                                             fixture::study(WellKind::FullEckart));
    CHECK(smooth.exact_by_symmetry);
    CHECK(smooth.interior + smooth.boundary == 0.0);
  }

  TEST_CASE("moment tail") {
    const MomentumDistribution& md = fixture::momentum(WellKind::HalfEckart, 0);
    const TailFit fit = tail_exponent(md);
    CHECK(moment_tail(md, 4, 200.0) == doctest::Approx(2.0 * fit.plateau_c6 / 200.0).epsilon(0.05));
    CHECK(std::isinf(moment_tail(md, 6, 200.0)));
    CHECK(std::isinf(moment_tail(fixture::momentum(WellKind::DeltaWell, 0), 4, 200.0)));
  }
}
