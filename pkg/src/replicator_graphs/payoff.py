"""Payoffs of the game played on a graph.

Two payoff models are supported.  Under ``WA`` a vertex earns the weighted
average of its one-to-one game payoffs against its out-neighbors; under
``WS`` it earns the weighted sum.  WS is WA with every ``B_v`` replaced by
``d_v * B_v``, which is exactly how it is implemented for mixed states.

Conventions
-----------
* vertices are 0-indexed;
* strategies are 1-indexed wherever a single strategy is named
  (``PureProfile`` entries, the ``s`` argument of :func:`strategy_fitness`),
  while array-valued results are plain 0-indexed numpy arrays;
* a vertex with no outgoing weight (``d_v == 0``) earns 0 for every
  strategy, so its state never moves under the dynamics.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .graph import Graph, GraphError

__all__ = [
    "DEFAULT_TENSOR_CAP",
    "GameSpec",
    "NoOutNeighborsError",
    "PayoffError",
    "PayoffTensor",
    "PureProfile",
    "StateProfile",
    "effective_matrices",
    "reference_neighbors",
    "environment_vector",
    "environment_vectors",
    "expected_payoff",
    "expected_payoffs",
    "fitness",
    "payoff_tensor",
    "pure_payoff",
    "strategy_fitness",
]

MODELS = ("WA", "WS")
DEFAULT_TENSOR_CAP = 10**6
# inputs off the simplex by more than this are rejected, smaller drift is renormalized
SIMPLEX_RENORM_TOL = 1e-9


class PayoffError(ValueError):
    pass


class NoOutNeighborsError(PayoffError):
    """The vertex has no outgoing weight, so its environment is undefined."""


@dataclass(frozen=True, eq=False)
class GameSpec:
    """Per-vertex ``M x M`` payoff matrices and the payoff model.

    ``matrices[v, s, r]`` is what vertex ``v`` earns playing ``s`` against
    ``r`` (0-indexed array positions).
    """

    matrices: np.ndarray
    model: str = "WA"

    def __post_init__(self):
        b = np.array(self.matrices, dtype=float, copy=True)
        if b.ndim != 3 or b.shape[1] != b.shape[2]:
            raise PayoffError(f"matrices must have shape (N, M, M), got {b.shape}")
        if b.shape[0] < 1:
            raise PayoffError("at least one payoff matrix is required")
        if b.shape[1] < 2:
            raise PayoffError(f"at least two strategies are required, got M={b.shape[1]}")
        if not np.all(np.isfinite(b)):
            raise PayoffError("payoff matrices must be finite")
        if self.model not in MODELS:
            raise PayoffError(f"unknown payoff model {self.model!r}; expected WA or WS")
        b.setflags(write=False)
        object.__setattr__(self, "matrices", b)

    @classmethod
    def uniform(cls, matrix, n: int, model: str = "WA") -> "GameSpec":
        """Every vertex uses the same matrix."""
        m = np.asarray(matrix, dtype=float)
        return cls(np.broadcast_to(m, (n,) + m.shape), model)

    @property
    def n(self) -> int:
        return self.matrices.shape[0]

    @property
    def m(self) -> int:
        return self.matrices.shape[1]

    def shifted(self, c: float) -> "GameSpec":
        return GameSpec(self.matrices + c, self.model)

    def __eq__(self, other):
        if not isinstance(other, GameSpec):
            return NotImplemented
        return self.model == other.model and np.array_equal(self.matrices, other.matrices)

    def __repr__(self):
        return f"GameSpec(n={self.n}, m={self.m}, model={self.model!r})"


@dataclass(frozen=True)
class PureProfile:
    """One pure strategy per vertex, 1-indexed as in ``S = {1..M}``."""

    strategies: tuple

    def __post_init__(self):
        object.__setattr__(self, "strategies", tuple(int(s) for s in self.strategies))

    def __len__(self):
        return len(self.strategies)

    def __iter__(self):
        return iter(self.strategies)

    def validate(self, n: int, m: int) -> None:
        if len(self.strategies) != n:
            raise PayoffError(f"profile has {len(self.strategies)} entries, graph has {n} vertices")
        bad = [s for s in self.strategies if not 1 <= s <= m]
        if bad:
            raise PayoffError(f"strategies must lie in 1..{m}, got {bad}")

    def replace(self, v: int, s: int) -> "PureProfile":
        st = list(self.strategies)
        st[v] = s
        return PureProfile(tuple(st))

    def to_state(self, m: int) -> "StateProfile":
        x = np.zeros((len(self.strategies), m))
        x[np.arange(len(self.strategies)), np.asarray(self.strategies) - 1] = 1.0
        return StateProfile(x)


@dataclass(frozen=True, eq=False)
class StateProfile:
    """Mixed strategies of all vertices, one row of ``states`` per vertex.

    Rows off the simplex by at most ``SIMPLEX_RENORM_TOL`` are renormalized
    on construction, larger deviations are rejected.
    """

    states: np.ndarray

    def __post_init__(self):
        x = np.array(self.states, dtype=float, copy=True)
        if x.ndim != 2 or x.shape[0] < 1 or x.shape[1] < 1:
            raise PayoffError(f"states must have shape (N, M), got {x.shape}")
        if not np.all(np.isfinite(x)):
            raise PayoffError("states must be finite")
        if np.any(x < 0):
            v, s = np.argwhere(x < 0)[0]
            raise PayoffError(f"negative share {x[v, s]!r} at vertex {v}, strategy {s + 1}")
        sums = x.sum(axis=1)
        dev = np.abs(sums - 1.0)
        if np.any(dev > SIMPLEX_RENORM_TOL):
            v = int(np.argmax(dev))
            raise PayoffError(f"state of vertex {v} sums to {sums[v]!r}, not 1")
        x /= sums[:, None]
        x.setflags(write=False)
        object.__setattr__(self, "states", x)

    @classmethod
    def homogeneous(cls, c, n: int) -> "StateProfile":
        c = np.asarray(c, dtype=float)
        return cls(np.tile(c, (n, 1)))

    @property
    def n(self) -> int:
        return self.states.shape[0]

    @property
    def m(self) -> int:
        return self.states.shape[1]

    def __getitem__(self, v):
        return self.states[v]

    def __eq__(self, other):
        if not isinstance(other, StateProfile):
            return NotImplemented
        return np.array_equal(self.states, other.states)

    def __repr__(self):
        return f"StateProfile({self.states.tolist()!r})"


def as_states(x) -> np.ndarray:
    """Return the ``(N, M)`` array behind ``x`` (a StateProfile or array-like)."""
    if isinstance(x, StateProfile):
        return x.states
    return np.asarray(x, dtype=float)


def _check(g: Graph, spec: GameSpec, x=None) -> None:
    if spec.n != g.n:
        raise PayoffError(f"game has {spec.n} matrices but graph has {g.n} vertices")
    if x is not None:
        xs = as_states(x)
        if xs.shape != (g.n, spec.m):
            raise PayoffError(f"state shape {xs.shape} does not match (N, M) = ({g.n}, {spec.m})")


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range 0..{g.n - 1}")


def effective_matrices(g: Graph, spec: GameSpec) -> np.ndarray:
    """Matrices to use with the normalized environment: ``B_v`` (WA) or ``d_v B_v`` (WS)."""
    _check(g, spec)
    if spec.model == "WS":
        return spec.matrices * g.weight_sums[:, None, None]
    return np.array(spec.matrices)


def reference_neighbors(g: Graph) -> np.ndarray:
    """First out-neighbor of every vertex, -1 where there is none."""
    has = g.weights > 0
    return np.where(has.any(axis=1), has.argmax(axis=1), -1)


def environment_vectors(g: Graph, x) -> np.ndarray:
    """``(1/d_v) sum_w a_vw x_w`` for every vertex; zero rows where ``d_v == 0``.

    Computed as an offset from one neighbor's state so that a vertex whose
    neighbors all play the same mixed strategy sees exactly that strategy.
    Plain weighted averaging rounds, and on some graphs that rounding seeds
    a drift away from homogeneous states the dynamics should preserve.
    """
    xs = as_states(x)
    ref = reference_neighbors(g)
    base = xs[np.maximum(ref, 0)]
    env = base + np.einsum("vw,vwr->vr", g.normalized_weights(), xs[None, :, :] - base[:, None, :])
    env[ref < 0] = 0.0
    return env


def environment_vector(g: Graph, x, v: int) -> np.ndarray:
    """The mixed strategy of the virtual opponent that vertex ``v`` faces."""
    _check_vertex(g, v)
    d = g.weight_sums[v]
    if d <= 0:
        raise NoOutNeighborsError(f"vertex {v} has no out-neighbors")
    return g.weights[v] @ as_states(x) / d


def fitness(g: Graph, spec: GameSpec, x) -> np.ndarray:
    """All strategy fitnesses ``p[v, s]`` as an ``(N, M)`` array."""
    _check(g, spec, x)
    env = environment_vectors(g, x)
    return np.einsum("vsr,vr->vs", effective_matrices(g, spec), env)


def expected_payoffs(g: Graph, spec: GameSpec, x) -> np.ndarray:
    """Expected payoff ``phi_v`` of every vertex."""
    return np.einsum("vs,vs->v", as_states(x), fitness(g, spec, x))


def strategy_fitness(g: Graph, spec: GameSpec, x, v: int, s: int) -> float:
    """Payoff of vertex ``v`` if it played pure strategy ``s`` (1-indexed)."""
    _check(g, spec, x)
    _check_vertex(g, v)
    if not 1 <= s <= spec.m:
        raise PayoffError(f"strategy {s} out of range 1..{spec.m}")
    d = g.weight_sums[v]
    if d <= 0:
        return 0.0
    env = g.weights[v] @ as_states(x) / d
    b = spec.matrices[v] * (d if spec.model == "WS" else 1.0)
    return float(b[s - 1] @ env)


def expected_payoff(g: Graph, spec: GameSpec, x, v: int) -> float:
    _check(g, spec, x)
    _check_vertex(g, v)
    d = g.weight_sums[v]
    if d <= 0:
        return 0.0
    xs = as_states(x)
    env = g.weights[v] @ xs / d
    b = spec.matrices[v] * (d if spec.model == "WS" else 1.0)
    return float(xs[v] @ b @ env)


def pure_payoff(g: Graph, spec: GameSpec, profile, v: int) -> float:
    """Payoff of vertex ``v`` when every vertex plays the given pure strategy."""
    _check(g, spec)
    _check_vertex(g, v)
    if not isinstance(profile, PureProfile):
        profile = PureProfile(tuple(profile))
    profile.validate(g.n, spec.m)
    sv = profile.strategies[v] - 1
    total = 0.0
    for w in np.flatnonzero(g.weights[v]):
        total += g.weights[v, w] * spec.matrices[v, sv, profile.strategies[w] - 1]
    if spec.model == "WA":
        d = g.weight_sums[v]
        return float(total / d) if d > 0 else 0.0
    return float(total)


@dataclass(frozen=True, eq=False)
class PayoffTensor:
    """Pure-profile payoffs of every vertex.

    ``values[v][s_1 - 1, ..., s_N - 1]`` is the payoff of vertex ``v``.
    """

    values: np.ndarray

    @property
    def n(self) -> int:
        return self.values.shape[0]

    @property
    def m(self) -> int:
        return self.values.shape[1]

    def __getitem__(self, key):
        v, profile = key
        return float(self.values[(v,) + tuple(s - 1 for s in profile)])

    def profiles(self) -> Iterator[PureProfile]:
        """All profiles in lexicographic order of ``(s_1, ..., s_N)``."""
        for p in itertools.product(range(1, self.m + 1), repeat=self.n):
            yield PureProfile(p)

    def rows(self) -> Iterator[tuple[tuple, np.ndarray]]:
        flat = self.values.reshape(self.n, -1)
        for i, p in enumerate(itertools.product(range(1, self.m + 1), repeat=self.n)):
            yield p, flat[:, i]


def payoff_tensor(g: Graph, spec: GameSpec, cap: int = DEFAULT_TENSOR_CAP) -> PayoffTensor:
    _check(g, spec)
    n, m = g.n, spec.m
    size = m**n
    if size > cap:
        raise PayoffError(f"payoff tensor needs {m}^{n} = {size} profiles per vertex, cap is {cap}")
    w = g.normalized_weights() if spec.model == "WA" else np.array(g.weights)
    out = np.zeros((n,) + (m,) * n)
    for v in range(n):
        # broadcast b[v, s_v, s_w] * w[v, w] over all profile axes
        t = np.zeros((m,) * n)
        for u in np.flatnonzero(w[v]):
            shape = [1] * n
            shape[v] = m
            shape[u] = m
            block = spec.matrices[v] if v < u else spec.matrices[v].T
            t = t + w[v, u] * block.reshape(shape)
        out[v] = t
    return PayoffTensor(out)

