import math

import pytest

import halfwell


def test_models_listed():
    assert "half-eckart" in halfwell.models()
    assert len(halfwell.models()) == 7


def test_half_eckart_spectrum():
    states = halfwell.solve(halfwell.spec("half-eckart"))
    published = [-10.9628, -5.8470, -2.2641, -0.3400]
    assert [s.n for s in states] == [0, 1, 2, 3]
    for state, energy in zip(states, published):
        assert abs(state.energy - energy) < 2e-3


def test_delta_well_momentum_distribution():
    spec = halfwell.spec("delta")
    (state,) = halfwell.solve(spec)
    assert state.energy == pytest.approx(-1.0)
    wf = halfwell.assemble(spec, state)
    md = halfwell.transform(wf, p_max=20.0)
    i = md.p.index(0.0)
    assert abs(md.phi[i] - math.sqrt(2 / math.pi)) < 1e-6
    assert md.intensity[i + 20] == pytest.approx(abs(md.phi[i + 20]) ** 2)


def test_jump_well_analysis():
    spec = halfwell.spec("half-parabolic")
    wf = halfwell.assemble(spec, halfwell.solve(spec)[0])
    assert halfwell.norm_residual(wf) < 1e-9
    md = halfwell.transform(wf)
    assert halfwell.parseval_residual(md) < 1e-4
    assert halfwell.divergence_verdict(md, 6).verdict == halfwell.Verdict.Divergent
    assert halfwell.divergence_verdict(md, 4).verdict == halfwell.Verdict.Convergent
    assert halfwell.tail_exponent(md).slope == pytest.approx(-6.0, abs=0.3)
    assert halfwell.ehrenfest(wf).relative < 1e-3
    assert halfwell.cross_representation(wf, md).p2_relative < 1e-3


def test_invalid_parameters_raise():
    with pytest.raises(halfwell.HalfwellError):
        halfwell.spec("half-parabolic", v0=-1.0)
    with pytest.raises(halfwell.HalfwellError):
        halfwell.spec("no-such-well")
