"""Equilibria of the N-player game induced by a graph.

Pure Nash equilibria are found by brute force over all ``M^N`` profiles.
Mixed equilibria are only handled for the homogeneous 2x2 case.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .dynamics import replicator_rhs
from .graph import Graph
from .payoff import (
    DEFAULT_TENSOR_CAP,
    GameSpec,
    PayoffError,
    PureProfile,
    _check,
    expected_payoffs,
    fitness,
    payoff_tensor,
)

__all__ = [
    "NASH_TOL",
    "EquilibriumReport",
    "MixedEquilibrium",
    "NashProfile",
    "RestPointCheck",
    "best_response_violation",
    "enumerate_pure_nash",
    "is_rest_point",
    "mixed_nash_2x2",
]

NASH_TOL = 1e-12


@dataclass(frozen=True)
class NashProfile:
    profile: PureProfile
    strict: bool
    # largest gain any vertex gets from a unilateral pure deviation (<= tol)
    deviation_gain: float


@dataclass(frozen=True)
class EquilibriumReport:
    nash: tuple
    checked_profiles: int
    # worst deviation gain of every profile, lexicographic order
    deviation_gains: np.ndarray

    @property
    def pure_nash(self) -> list[PureProfile]:
        return [e.profile for e in self.nash]

    def as_set(self) -> set[tuple]:
        return {e.profile.strategies for e in self.nash}


def enumerate_pure_nash(
    g: Graph, spec: GameSpec, tol: float = NASH_TOL, cap: int = DEFAULT_TENSOR_CAP
) -> EquilibriumReport:
    """All pure profiles at which no vertex gains by switching strategy alone."""
    tensor = payoff_tensor(g, spec, cap=cap).values
    n, m = g.n, spec.m
    gains = np.full((m,) * n, -np.inf)
    for v in range(n):
        t = tensor[v]
        gains = np.maximum(gains, t.max(axis=v, keepdims=True) - t)
    found = []
    for idx in itertools.product(range(m), repeat=n):
        if gains[idx] > tol:
            continue
        strict = True
        for v in range(n):
            alt = list(idx)
            own = tensor[v][idx]
            for s in range(m):
                alt[v] = s
                if s != idx[v] and tensor[v][tuple(alt)] >= own - tol:
                    strict = False
        found.append(
            NashProfile(
                profile=PureProfile(tuple(i + 1 for i in idx)),
                strict=strict,
                deviation_gain=float(gains[idx]),
            )
        )
    return EquilibriumReport(
        nash=tuple(found), checked_profiles=m**n, deviation_gains=gains.reshape(-1).copy()
    )


@dataclass(frozen=True)
class MixedEquilibrium:
    point: np.ndarray | None
    degenerate: bool = False

    def __bool__(self):
        return self.point is not None


def mixed_nash_2x2(B) -> MixedEquilibrium:
    """Interior point where both strategies of a symmetric 2x2 game earn the same.

    Returns an empty result when the indifference point is not strictly
    inside the simplex, flagged ``degenerate`` when the game has no unique
    indifference point.
    """
    B = np.asarray(B, dtype=float)
    if B.shape != (2, 2):
        raise PayoffError(f"expected a 2x2 matrix, got shape {B.shape}")
    den = B[0, 0] - B[0, 1] - B[1, 0] + B[1, 1]
    if abs(den) < 1e-12:
        return MixedEquilibrium(None, degenerate=True)
    x1 = (B[1, 1] - B[0, 1]) / den
    if not 0.0 < x1 < 1.0:
        return MixedEquilibrium(None)
    return MixedEquilibrium(np.array([x1, 1.0 - x1]))


@dataclass(frozen=True)
class RestPointCheck:
    is_rest: bool
    residual: float

    def __bool__(self):
        return self.is_rest


def is_rest_point(g: Graph, spec: GameSpec, x, tol: float = 1e-12) -> RestPointCheck:
    r = float(np.abs(replicator_rhs(g, spec, x)).max())
    return RestPointCheck(r <= tol, r)


def best_response_violation(g: Graph, spec: GameSpec, x, v: int | None = None):
    """``max_s p[v, s] - phi[v]``; non-positive everywhere iff ``x`` is a Nash profile.

    With ``v=None`` returns the array over all vertices.
    """
    _check(g, spec, x)
    gap = fitness(g, spec, x).max(axis=1) - expected_payoffs(g, spec, x)
    if v is None:
        return gap
    return float(gap[v])
