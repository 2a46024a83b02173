import itertools

import numpy as np
import pytest

from replicator_graphs import GameSpec, build_star, make_graph, pure_payoff

# 0-indexed heavy edges of the shipped asymmetric star (1-indexed: 1-2, 1-3, 3-4, 2-6)
HEAVY_EDGES = [(0, 1), (0, 2), (2, 3), (5, 1)]


def example_graph(mu=1.0):
    """Three-player example: rows are [0, 1, mu], [mu, 0, 2mu], [0, mu, 0]."""
    edges = [(0, 1, 1.0), (0, 2, mu), (1, 0, mu), (1, 2, 2 * mu), (2, 1, mu)]
    return make_graph(3, [e for e in edges if e[2] > 0])


def star_graphs():
    return {
        "open": build_star("open", 6),
        "closed": build_star("closed", 6),
        "weighted": build_star("weighted_asymmetric", 6, 3.0, HEAVY_EDGES),
    }


def random_instance(rng, n=None, m=None, low=-2.0, high=2.0, density=0.7):
    """Random graph (every vertex keeps at least one out-edge), matrices and state."""
    n = n or int(rng.integers(2, 7))
    m = m or int(rng.integers(2, 4))
    a = rng.uniform(0.1, 3.0, (n, n)) * (rng.random((n, n)) < density)
    np.fill_diagonal(a, 0.0)
    for v in range(n):
        if not a[v].any():
            w = (v + 1 + int(rng.integers(0, n - 1))) % n
            a[v, w] = rng.uniform(0.1, 3.0)
    edges = [(v, w, a[v, w]) for v in range(n) for w in range(n) if a[v, w] > 0]
    g = make_graph(n, edges)
    spec = GameSpec(rng.uniform(low, high, (n, m, m)), "WA")
    x = rng.dirichlet(np.ones(m), size=n)
    return g, spec, x


@pytest.fixture
def rng():
    return np.random.default_rng(20131007)


def table1(a, b, c, d, mu):
    """Payoff tensor of the three-player example, typed in row by row.

    Maps (s1, s2, s3) -> ((pi1_WA, pi1_WS), (pi2_WA, pi2_WS), (pi3_WA, pi3_WS)).
    """
    return {
        (1, 1, 1): ((a, a * (1 + mu)), (a, 3 * a * mu), (a, a * mu)),
        (1, 1, 2): (((a + b * mu) / (1 + mu), a + b * mu), ((a + 2 * b) / 3, (a + 2 * b) * mu), (c, c * mu)),
        (1, 2, 1): (((a * mu + b) / (1 + mu), a * mu + b), (c, 3 * c * mu), (b, b * mu)),
        (1, 2, 2): ((b, b * (1 + mu)), ((c + 2 * d) / 3, (c + 2 * d) * mu), (d, d * mu)),
        (2, 1, 1): ((c, c * (1 + mu)), ((2 * a + b) / 3, (2 * a + b) * mu), (a, a * mu)),
        (2, 1, 2): (((c + d * mu) / (1 + mu), c + d * mu), (b, 3 * b * mu), (c, c * mu)),
        (2, 2, 1): (((c * mu + d) / (1 + mu), c * mu + d), ((2 * c + d) / 3, (2 * c + d) * mu), (b, b * mu)),
        (2, 2, 2): ((d, d * (1 + mu)), (d, 3 * d * mu), (d, d * mu)),
    }


def nash_oracle(g, spec, tol=1e-12):
    """Double loop over profiles and unilateral deviations using pure_payoff."""
    found = set()
    for profile in itertools.product(range(1, spec.m + 1), repeat=g.n):
        ok = True
        for v in range(g.n):
            own = pure_payoff(g, spec, profile, v)
            for s in range(1, spec.m + 1):
                dev = list(profile)
                dev[v] = s
                if pure_payoff(g, spec, tuple(dev), v) > own + tol:
                    ok = False
        if ok:
            found.add(profile)
    return found


ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: (int(k.rstrip("ab")), k)):
        terminalreporter.write_line(ACCEPTANCE[key])
