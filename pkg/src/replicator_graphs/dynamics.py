"""Replicator dynamics on a graph.

The continuous system is

    dx[v, s]/dt = x[v, s] * (p[v, s] - phi[v])

with ``p`` the strategy fitnesses and ``phi`` the expected payoff of each
vertex (see :mod:`replicator_graphs.payoff`).  :func:`integrate` solves it
with fixed-step RK4 and periodic projection back onto the simplex.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numba
import numpy as np

from .graph import Graph
from .payoff import (
    GameSpec,
    PayoffError,
    StateProfile,
    _check,
    as_states,
    effective_matrices,
    environment_vectors,
    reference_neighbors,
)

__all__ = [
    "IntegrationError",
    "IntegratorOptions",
    "StepSizeError",
    "Trajectory",
    "classical_rhs",
    "detect_steady_state",
    "discrete_step",
    "integrate",
    "integrate_classical",
    "replicator_rhs",
]

# abort threshold for negative shares; anything in [-NEG_ABORT, 0) is drift
NEG_ABORT = 1e-9
NEG_CLAMP = 1e-12


class IntegrationError(RuntimeError):
    """The integrator left the simplex by more than rounding can explain."""


class StepSizeError(ValueError):
    pass


def replicator_rhs(g: Graph, spec: GameSpec, x) -> np.ndarray:
    """Time derivative of every share, shape ``(N, M)``."""
    _check(g, spec, x)
    xs = as_states(x)
    p = np.einsum("vsr,vr->vs", effective_matrices(g, spec), environment_vectors(g, xs))
    phi = np.einsum("vs,vs->v", xs, p)
    return xs * (p - phi[:, None])


def classical_rhs(B, y) -> np.ndarray:
    """Single-population replicator field ``y_s (e_s^T B y - y^T B y)``."""
    B = np.asarray(B, dtype=float)
    y = np.asarray(y, dtype=float)
    p = B @ y
    return y * (p - y @ p)


def discrete_step(g: Graph, spec: GameSpec, x, tau: float) -> StateProfile:
    """One generation of the discrete-time replicator map with period ``tau``."""
    if not tau > 0:
        raise StepSizeError(f"tau must be positive, got {tau!r}")
    _check(g, spec, x)
    xs = as_states(x)
    p = np.einsum("vsr,vr->vs", effective_matrices(g, spec), environment_vectors(g, xs))
    phi = np.einsum("vs,vs->v", xs, p)
    den = 1.0 + phi * tau
    if np.any(den <= 0):
        v = int(np.argmin(den))
        raise StepSizeError(
            f"1 + phi*tau = {den[v]!r} <= 0 at vertex {v} (phi={phi[v]!r}); reduce tau"
        )
    new = xs * (1.0 + p * tau) / den[:, None]
    if np.any(new < 0):
        v, s = np.argwhere(new < 0)[0]
        raise StepSizeError(
            f"negative share {new[v, s]!r} at vertex {v}, strategy {s + 1}; reduce tau"
        )
    return StateProfile(new)


@dataclass(frozen=True)
class IntegratorOptions:
    dt: float = 1e-3
    t_end: float = 50.0
    renormalize_every: int = 100
    clamp_negatives: bool = True
    sample_every: int = 100

    def __post_init__(self):
        if not (self.dt > 0 and math.isfinite(self.dt)):
            raise StepSizeError(f"dt must be positive, got {self.dt!r}")
        if not self.t_end >= self.dt:
            raise StepSizeError(f"t_end ({self.t_end!r}) must be at least dt ({self.dt!r})")
        if int(self.renormalize_every) != self.renormalize_every or self.renormalize_every < 1:
            raise StepSizeError(f"renormalize_every must be a positive integer, got {self.renormalize_every!r}")
        if int(self.sample_every) != self.sample_every or self.sample_every < 1:
            raise StepSizeError(f"sample_every must be a positive integer, got {self.sample_every!r}")

    @property
    def n_steps(self) -> int:
        return max(1, math.ceil(self.t_end / self.dt - 1e-9))


@dataclass
class Trajectory:
    """Sampled solution.

    ``states[k]`` is the ``(N, M)`` state at ``times[k]``.  ``residuals[k]``
    is the worst ``|sum_s x[v, s] - 1|`` seen (before renormalization) since
    the previous sample, ``derivative_norms[k]`` the max-abs derivative at
    the sample.
    """

    times: np.ndarray
    states: np.ndarray
    residuals: np.ndarray = field(default=None)
    derivative_norms: np.ndarray = field(default=None)
    min_component: float = 0.0

    def __len__(self):
        return len(self.times)

    @property
    def final_state(self) -> StateProfile:
        return StateProfile(self.states[-1])

    def profile(self, k: int) -> StateProfile:
        return StateProfile(self.states[k])

    @property
    def max_residual(self) -> float:
        return float(np.max(self.residuals)) if self.residuals is not None else 0.0


@numba.njit(cache=True)
def _field(W, ref, B, x, out):
    n, m = x.shape
    env = np.empty(m)
    for v in range(n):
        u = ref[v]
        for r in range(m):
            if u < 0:
                env[r] = 0.0
                continue
            # offset from a neighbor keeps equal neighbor states exact
            acc = 0.0
            for w in range(n):
                acc += W[v, w] * (x[w, r] - x[u, r])
            env[r] = x[u, r] + acc
        phi = 0.0
        for s in range(m):
            ps = 0.0
            for r in range(m):
                ps += B[v, s, r] * env[r]
            out[v, s] = ps
            phi += x[v, s] * ps
        for s in range(m):
            out[v, s] = x[v, s] * (out[v, s] - phi)


@numba.njit(cache=True)
def _rk4_steps(W, ref, B, x, dt, nsteps):
    """Advance ``x`` in place; returns (worst residual, min component) over the steps."""
    n, m = x.shape
    k1 = np.empty_like(x)
    k2 = np.empty_like(x)
    k3 = np.empty_like(x)
    k4 = np.empty_like(x)
    tmp = np.empty_like(x)
    worst = 0.0
    lowest = np.inf
    for _ in range(nsteps):
        _field(W, ref, B, x, k1)
        for v in range(n):
            for s in range(m):
                tmp[v, s] = x[v, s] + 0.5 * dt * k1[v, s]
        _field(W, ref, B, tmp, k2)
        for v in range(n):
            for s in range(m):
                tmp[v, s] = x[v, s] + 0.5 * dt * k2[v, s]
        _field(W, ref, B, tmp, k3)
        for v in range(n):
            for s in range(m):
                tmp[v, s] = x[v, s] + dt * k3[v, s]
        _field(W, ref, B, tmp, k4)
        for v in range(n):
            total = 0.0
            for s in range(m):
                x[v, s] += dt / 6.0 * (k1[v, s] + 2.0 * k2[v, s] + 2.0 * k3[v, s] + k4[v, s])
                total += x[v, s]
                if x[v, s] < lowest:
                    lowest = x[v, s]
            if abs(total - 1.0) > worst:
                worst = abs(total - 1.0)
    return worst, lowest


def _project(x: np.ndarray, clamp: bool, t: float) -> None:
    low = x.min()
    if low < -NEG_ABORT:
        v, s = np.unravel_index(np.argmin(x), x.shape)
        raise IntegrationError(
            f"share x[{v}, {s + 1}] = {low!r} at t={t:.6g} left the simplex; step too large"
        )
    if clamp:
        x[(x < 0) & (x >= -NEG_CLAMP)] = 0.0
    x /= x.sum(axis=1, keepdims=True)


def _run(W, ref, B, x0, opts: IntegratorOptions, field_fn):
    x = np.array(x0, dtype=float)
    n_steps = opts.n_steps
    last_dt = opts.t_end - (n_steps - 1) * opts.dt
    full = n_steps if abs(last_dt - opts.dt) <= 1e-12 * opts.dt else n_steps - 1
    times, states, resid, dnorm = [0.0], [x.copy()], [abs(x.sum(axis=1) - 1).max()], [
        np.abs(field_fn(x)).max()
    ]
    lowest = float(x.min())
    since_sample = 0.0
    k = 0
    while k < n_steps:
        if k < full:
            to_renorm = opts.renormalize_every - k % opts.renormalize_every
            to_sample = opts.sample_every - k % opts.sample_every
            block = min(to_renorm, to_sample, full - k)
            worst, low = _rk4_steps(W, ref, B, x, opts.dt, block)
            k += block
        else:
            worst, low = _rk4_steps(W, ref, B, x, last_dt, 1)
            k += 1
        since_sample = max(since_sample, worst)
        lowest = min(lowest, low)
        t = opts.t_end if k == n_steps else k * opts.dt
        if lowest < -NEG_ABORT:
            _project(x, opts.clamp_negatives, t)
        if k % opts.renormalize_every == 0 or k == n_steps:
            _project(x, opts.clamp_negatives, t)
        if k % opts.sample_every == 0 or k == n_steps:
            times.append(t)
            states.append(x.copy())
            resid.append(since_sample)
            dnorm.append(np.abs(field_fn(x)).max())
            since_sample = 0.0
    return Trajectory(
        times=np.array(times),
        states=np.array(states),
        residuals=np.array(resid),
        derivative_norms=np.array(dnorm),
        min_component=lowest,
    )


def integrate(g: Graph, spec: GameSpec, x0, opts: IntegratorOptions | None = None) -> Trajectory:
    """Integrate the graph replicator equation from ``x0`` to ``opts.t_end``.

    Raises IntegrationError if any share drops below ``-1e-9``.
    """
    opts = opts or IntegratorOptions()
    if not isinstance(x0, StateProfile):
        x0 = StateProfile(x0)
    _check(g, spec, x0)
    W = np.ascontiguousarray(g.normalized_weights())
    ref = reference_neighbors(g).astype(np.int64)
    B = np.ascontiguousarray(effective_matrices(g, spec))

    def field_fn(x):
        out = np.empty_like(x)
        _field(W, ref, B, x, out)
        return out

    return _run(W, ref, B, x0.states, opts, field_fn)


def integrate_classical(B, y0, opts: IntegratorOptions | None = None) -> Trajectory:
    """Classical replicator equation with the same RK4/renormalization scheme.

    Written as a plain numpy loop over :func:`classical_rhs` so it can serve
    as an independent reference for :func:`integrate`.
    """
    opts = opts or IntegratorOptions()
    B = np.asarray(B, dtype=float)
    y = np.array(y0, dtype=float)
    if B.shape != (y.size, y.size):
        raise PayoffError(f"matrix shape {B.shape} does not match state size {y.size}")
    n_steps = opts.n_steps
    last_dt = opts.t_end - (n_steps - 1) * opts.dt
    if abs(last_dt - opts.dt) <= 1e-12 * opts.dt:
        last_dt = opts.dt
    times, states = [0.0], [y.copy()]
    resid, dnorm = [abs(y.sum() - 1)], [np.abs(classical_rhs(B, y)).max()]
    lowest = float(y.min())
    since = 0.0
    for k in range(1, n_steps + 1):
        h = opts.dt if k < n_steps else last_dt
        k1 = classical_rhs(B, y)
        k2 = classical_rhs(B, y + 0.5 * h * k1)
        k3 = classical_rhs(B, y + 0.5 * h * k2)
        k4 = classical_rhs(B, y + h * k3)
        y = y + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        since = max(since, abs(y.sum() - 1.0))
        lowest = min(lowest, float(y.min()))
        t = opts.t_end if k == n_steps else k * opts.dt
        if k % opts.renormalize_every == 0 or k == n_steps:
            y2 = y[None, :]
            _project(y2, opts.clamp_negatives, t)
            y = y2[0]
        if k % opts.sample_every == 0 or k == n_steps:
            times.append(t)
            states.append(y.copy())
            resid.append(since)
            dnorm.append(np.abs(classical_rhs(B, y)).max())
            since = 0.0
    return Trajectory(
        times=np.array(times),
        states=np.array(states)[:, None, :],
        residuals=np.array(resid),
        derivative_norms=np.array(dnorm),
        min_component=lowest,
    )


def detect_steady_state(
    traj: Trajectory, g: Graph, spec: GameSpec, eps: float = 1e-6, window: float = 5.0
) -> float | None:
    """Earliest sample time after which the derivative stays below ``eps`` for ``window``.

    The whole window must lie inside the trajectory; returns None otherwise.
    """
    times = np.asarray(traj.times)
    span = times[-1] - times[0]
    if window > span + 1e-12:
        raise ValueError(f"window {window!r} exceeds trajectory span {span!r}")
    norms = np.array([np.abs(replicator_rhs(g, spec, s)).max() for s in traj.states])
    calm = norms < eps
    # first index of the run of calm samples ending at each position
    run_start = np.empty(len(calm), dtype=int)
    start = 0
    for i, ok in enumerate(calm):
        if not ok:
            start = i + 1
        run_start[i] = start
    for i in range(len(times)):
        if not calm[i]:
            continue
        end_t = times[i] + window
        if end_t > times[-1] + 1e-9:
            return None
        j = int(np.searchsorted(times, end_t - 1e-9))
        j = min(j, len(times) - 1)
        if run_start[j] <= i and calm[j]:
            return float(times[i])
    return None
