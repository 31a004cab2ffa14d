"""Bound states and momentum distributions of one-dimensional wells."""

from ._core import (
    BoundState,
    HalfwellError,
    MomentumDistribution,
    Verdict,
    WaveFunction,
    WellKind,
    assemble,
    cross_representation,
    divergence_verdict,
    ehrenfest,
    models,
    node_count,
    norm_residual,
    parseval_residual,
    partial_moment,
    potential,
    solve,
    spec,
    tail_exponent,
    transform,
)

__all__ = [
    "BoundState",
    "HalfwellError",
    "MomentumDistribution",
    "Verdict",
    "WaveFunction",
    "WellKind",
    "assemble",
    "cross_representation",
    "divergence_verdict",
    "ehrenfest",
    "models",
    "node_count",
    "norm_residual",
    "parseval_residual",
    "partial_moment",
    "potential",
    "solve",
    "spec",
    "tail_exponent",
    "transform",
]
