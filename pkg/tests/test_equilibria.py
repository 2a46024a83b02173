import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from replicator_graphs import (
    GameSpec,
    PayoffError,
    PureProfile,
    StateProfile,
    best_response_violation,
    build_star,
    enumerate_pure_nash,
    is_rest_point,
    make_graph,
    mixed_nash_2x2,
)
from replicator_graphs.scenario import bistable, coexistence, prisoner

from conftest import example_graph, nash_oracle, random_instance, star_graphs


def pair():
    return make_graph(2, [(0, 1, 1.0), (1, 0, 1.0)])


def test_bistable_pair():
    report = enumerate_pure_nash(pair(), GameSpec.uniform(bistable(1.0), 2))
    assert report.as_set() == {(1, 1), (2, 2)}
    assert all(e.strict for e in report.nash)
    assert report.checked_profiles == 4


def test_prisoner_pair():
    report = enumerate_pure_nash(pair(), GameSpec.uniform(prisoner(1.5), 2))
    assert (2, 2) in report.as_set()
    # against a defector both strategies pay 0, so every profile with a defector is weak
    assert report.as_set() == {(1, 2), (2, 1), (2, 2)}
    assert not any(e.strict for e in report.nash)


def test_example_graph_matches_oracle():
    g = example_graph(1.0)
    for model in ("WA", "WS"):
        spec = GameSpec.uniform([[1, 2], [3, 4]], 3, model)
        assert enumerate_pure_nash(g, spec).as_set() == nash_oracle(g, spec)


def test_report_is_lexicographic(rng):
    g, spec, _ = random_instance(rng, n=4, m=2)
    spec = GameSpec.uniform(np.eye(2), 4)
    profiles = [e.profile.strategies for e in enumerate_pure_nash(g, spec).nash]
    assert profiles == sorted(profiles)


def test_deviation_gains_nonpositive_for_nash(rng):
    g, spec, _ = random_instance(rng, n=3, m=3)
    report = enumerate_pure_nash(g, spec)
    assert all(e.deviation_gain <= 1e-12 for e in report.nash)
    assert len(report.deviation_gains) == 27


def test_enumeration_cap():
    with pytest.raises(PayoffError):
        enumerate_pure_nash(build_star("open", 6), GameSpec.uniform(np.eye(2), 6), cap=10)


@pytest.mark.parametrize(
    "B, expected",
    [
        (bistable(1.0), [0.5, 0.5]),
        (bistable(2.0), [2 / 3, 1 / 3]),
        (coexistence(), [0.5, 0.5]),
    ],
)
def test_mixed_nash_2x2(B, expected):
    eq = mixed_nash_2x2(B)
    assert eq
    assert np.allclose(eq.point, expected, atol=1e-15)


def test_mixed_nash_2x2_absent():
    assert not mixed_nash_2x2(prisoner(1.5))  # boundary point, not interior
    eq = mixed_nash_2x2([[1.0, 1.0], [1.0, 1.0]])
    assert not eq and eq.degenerate
    with pytest.raises(PayoffError):
        mixed_nash_2x2(np.eye(3))


def test_pure_profiles_are_rest_points():
    for g in star_graphs().values():
        spec = GameSpec.uniform(prisoner(1.5), 6)
        for profile in itertools.product((1, 2), repeat=6):
            check = is_rest_point(g, spec, PureProfile(profile).to_state(2), tol=0.0)
            assert check and check.residual == 0.0


def test_homogeneous_mixed_nash_is_rest_point():
    for B in (bistable(1.0), bistable(2.0), coexistence()):
        x = StateProfile.homogeneous(mixed_nash_2x2(B).point, 6)
        for g in star_graphs().values():
            spec = GameSpec.uniform(B, 6)
            # indifference: both strategies earn the same against the mixed point
            assert np.abs(best_response_violation(g, spec, x)).max() < 1e-15
            assert is_rest_point(g, spec, x, tol=1e-12)


def test_non_equilibrium_is_not_rest_point(rng):
    g, spec, x = random_instance(rng, n=4)
    check = is_rest_point(g, spec, x, tol=1e-12)
    assert not check and check.residual > 0


def test_best_response_violation_examples():
    g = build_star("closed", 6)
    spec = GameSpec.uniform(prisoner(1.5), 6)
    coop = StateProfile.homogeneous([1.0, 0.0], 6)
    assert np.allclose(best_response_violation(g, spec, coop), 0.5, atol=1e-15)
    assert best_response_violation(g, spec, coop, 3) == pytest.approx(0.5)
    defect = StateProfile.homogeneous([0.0, 1.0], 6)
    assert np.all(best_response_violation(g, spec, defect) <= 0)


def test_best_response_violation_dead_vertex():
    g = make_graph(3, [(0, 1, 1.0), (1, 0, 1.0)])
    spec = GameSpec.uniform(prisoner(1.5), 3)
    x = StateProfile.homogeneous([1.0, 0.0], 3)
    assert best_response_violation(g, spec, x, 2) == 0.0


seeds = st.integers(0, 2**32 - 1)


@settings(max_examples=40, deadline=None)
@given(seeds, st.floats(-3, 3))
def test_nash_set_shift_invariant(seed, c):
    rng = np.random.default_rng(seed)
    g, spec, _ = random_instance(rng, n=int(rng.integers(2, 5)), low=-2, high=2)
    # quantize so ties survive the shift exactly
    spec = GameSpec(np.round(spec.matrices * 4) / 4)
    a = enumerate_pure_nash(g, spec).as_set()
    b = enumerate_pure_nash(g, GameSpec(spec.matrices + round(c * 4) / 4)).as_set()
    assert a == b


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_ws_nash_equals_wa_of_scaled(seed):
    rng = np.random.default_rng(seed)
    g, spec, _ = random_instance(rng, n=int(rng.integers(2, 5)))
    ws = enumerate_pure_nash(g, GameSpec(spec.matrices, "WS")).as_set()
    wa = enumerate_pure_nash(g, GameSpec(spec.matrices * g.weight_sums[:, None, None], "WA")).as_set()
    assert ws == wa


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_wa_nash_invariant_to_positive_rescaling(seed):
    rng = np.random.default_rng(seed)
    g, spec, _ = random_instance(rng, n=int(rng.integers(2, 5)))
    scales = rng.uniform(0.2, 5.0, g.n)
    scaled = GameSpec(spec.matrices * scales[:, None, None])
    assert enumerate_pure_nash(g, spec).as_set() == enumerate_pure_nash(g, scaled).as_set()


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_enumeration_matches_oracle(seed):
    rng = np.random.default_rng(seed)
    g, spec, _ = random_instance(rng, n=int(rng.integers(2, 5)), m=int(rng.integers(2, 4)))
    assert enumerate_pure_nash(g, spec).as_set() == nash_oracle(g, spec)
