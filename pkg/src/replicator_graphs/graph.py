"""Weighted directed graphs of players.

A graph is stored as a dense ``n x n`` weight matrix ``weights`` where
``weights[v, w]`` is the importance vertex ``v`` attaches to its game
against ``w``.  Vertices are 0-indexed here; scenario files and CSV output
use 1-indexed labels (vertex 1 is the hub of every star graph).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "Graph",
    "GraphError",
    "NeighborhoodReport",
    "STAR_KINDS",
    "build_star",
    "closed_star_edges",
    "make_graph",
    "neighborhood",
]

STAR_KINDS = ("open", "closed", "weighted_asymmetric")


class GraphError(ValueError):
    """Raised for malformed graph data."""


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable weighted directed graph without self-loops."""

    weights: np.ndarray

    def __post_init__(self):
        a = np.array(self.weights, dtype=float, copy=True)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
            raise GraphError(f"weights must be a non-empty square matrix, got shape {a.shape}")
        if not np.all(np.isfinite(a)):
            raise GraphError("weights must be finite")
        if np.any(a < 0):
            raise GraphError("weights must be non-negative")
        if np.any(np.diag(a) != 0):
            raise GraphError("self-loops are not allowed (diagonal must be zero)")
        a.setflags(write=False)
        object.__setattr__(self, "weights", a)

    @property
    def n(self) -> int:
        return self.weights.shape[0]

    @property
    def weight_sums(self) -> np.ndarray:
        """Row sums ``d_v``; the WA normalization factors."""
        return self.weights.sum(axis=1)

    def normalized_weights(self) -> np.ndarray:
        """Row-normalized weights; rows of vertices with no out-edges stay zero."""
        d = self.weight_sums
        out = np.zeros_like(self.weights)
        nz = d > 0
        out[nz] = self.weights[nz] / d[nz, None]
        return out

    def permuted(self, perm: Sequence[int]) -> "Graph":
        """Relabel vertices so that new vertex ``i`` is old vertex ``perm[i]``."""
        p = np.asarray(perm)
        return Graph(self.weights[np.ix_(p, p)])

    def is_symmetric(self) -> bool:
        return bool(np.array_equal(self.weights, self.weights.T))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return np.array_equal(self.weights, other.weights)

    def __hash__(self):
        return hash(self.weights.tobytes())

    def __repr__(self):
        return f"Graph(n={self.n}, edges={int(np.count_nonzero(self.weights))})"


@dataclass(frozen=True)
class NeighborhoodReport:
    neighbors: frozenset
    out_neighbors: frozenset
    weight_sum: float

    @property
    def degree(self) -> int:
        return len(self.neighbors)

    @property
    def out_degree(self) -> int:
        return len(self.out_neighbors)


def make_graph(n: int, edges: Iterable[tuple[int, int, float]]) -> Graph:
    """Build a graph from ``(from, to, weight)`` triples (0-indexed).

    Every listed weight must be positive; unlisted pairs get weight 0.
    """
    if int(n) != n or n < 1:
        raise GraphError(f"vertex count must be a positive integer, got {n!r}")
    n = int(n)
    a = np.zeros((n, n))
    seen = set()
    for edge in edges:
        try:
            v, w, weight = edge
        except (TypeError, ValueError):
            raise GraphError(f"edge must be a (from, to, weight) triple, got {edge!r}") from None
        if int(v) != v or int(w) != w:
            raise GraphError(f"vertex indices must be integers: {edge!r}")
        v, w = int(v), int(w)
        if not (0 <= v < n and 0 <= w < n):
            raise GraphError(f"edge {edge!r} references a vertex outside 0..{n - 1}")
        if v == w:
            raise GraphError(f"self-loop on vertex {v} is not allowed")
        if (v, w) in seen:
            raise GraphError(f"duplicate directed edge ({v}, {w})")
        if not weight > 0 or not np.isfinite(weight):
            raise GraphError(f"edge ({v}, {w}) must have a positive finite weight, got {weight!r}")
        seen.add((v, w))
        a[v, w] = float(weight)
    return Graph(a)


def neighborhood(g: Graph, v: int) -> NeighborhoodReport:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range 0..{g.n - 1}")
    row = g.weights[v]
    col = g.weights[:, v]
    out_nb = frozenset(int(w) for w in np.flatnonzero(row > 0))
    nb = frozenset(int(w) for w in np.flatnonzero((row > 0) | (col > 0)))
    return NeighborhoodReport(neighbors=nb, out_neighbors=out_nb, weight_sum=float(row.sum()))


def closed_star_edges(n: int) -> list[tuple[int, int]]:
    """Undirected edges of the closed star: hub spokes, then the peripheral cycle."""
    spokes = [(0, i) for i in range(1, n)]
    cycle = [(i, i + 1) for i in range(1, n - 1)]
    if n > 3:
        cycle.append((1, n - 1))
    return spokes + cycle


def build_star(
    kind: str,
    n: int,
    heavy_weight: float = 3.0,
    heavy_edges: Sequence[tuple[int, int]] = (),
) -> Graph:
    """Star topologies with hub 0 and peripherals ``1..n-1``.

    ``open`` has only the hub spokes, ``closed`` adds the peripheral cycle
    ``1-2-...-(n-1)-1``, and ``weighted_asymmetric`` is the closed star with
    the undirected ``heavy_edges`` reweighted to ``heavy_weight``.  Every
    construction is symmetric.
    """
    if kind not in STAR_KINDS:
        raise GraphError(f"unknown star kind {kind!r}; expected one of {', '.join(STAR_KINDS)}")
    if int(n) != n or n < 3:
        raise GraphError(f"star graphs need n >= 3, got {n!r}")
    n = int(n)
    undirected = closed_star_edges(n) if kind != "open" else [(0, i) for i in range(1, n)]
    a = np.zeros((n, n))
    for v, w in undirected:
        a[v, w] = a[w, v] = 1.0
    if kind == "weighted_asymmetric":
        if not heavy_weight > 0:
            raise GraphError(f"heavy_weight must be positive, got {heavy_weight!r}")
        present = {frozenset(e) for e in closed_star_edges(n)}
        for edge in heavy_edges:
            v, w = (int(u) for u in edge)
            if frozenset((v, w)) not in present:
                raise GraphError(f"heavy edge ({v}, {w}) is not an edge of the closed star")
            a[v, w] = a[w, v] = float(heavy_weight)
    return Graph(a)
