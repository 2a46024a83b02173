"""End-to-end acceptance checks, one test per criterion.

Each test prints a ``PASS``/``FAIL`` line and records it for the summary
printed at the end of the pytest run.
"""

import numpy as np
import pytest

from replicator_graphs import (
    GameSpec,
    PureProfile,
    StateProfile,
    build_star,
    discrete_step,
    enumerate_pure_nash,
    integrate,
    is_rest_point,
    make_graph,
    mixed_nash_2x2,
    payoff_tensor,
    replicator_rhs,
)
from replicator_graphs.cli import main
from replicator_graphs.dynamics import IntegratorOptions, integrate_classical
from replicator_graphs.scenario import bistable, coexistence, parse_scenario, prisoner, run_scenario, scenario_dir

from conftest import ACCEPTANCE, example_graph, nash_oracle, random_instance, star_graphs, table1

SHIPPED = scenario_dir()
PRESETS = {"bistable": bistable(1.0), "prisoner": prisoner(1.5), "coexistence": coexistence()}
KINDS = ("open", "closed", "weighted")


def verdict(key, title, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] {key:>3}. {title}: {detail}"
    ACCEPTANCE[key] = line
    print(line)
    assert ok, line


def endpoint(name):
    return run_scenario(parse_scenario(SHIPPED / f"{name}.json"), out_dir=None).final_state.states


@pytest.fixture(autouse=True)
def _scratch_out(tmp_path, monkeypatch):
    monkeypatch.setenv("REPLICATOR_GRAPHS_OUT", str(tmp_path / "out"))


def test_01_three_player_tensor():
    g = example_graph(1.0)
    expected = table1(1, 2, 3, 4, 1.0)
    worst = 0.0
    for col, model in enumerate(("WA", "WS")):
        tensor = payoff_tensor(g, GameSpec.uniform([[1, 2], [3, 4]], 3, model))
        for profile, row in expected.items():
            for v in range(3):
                worst = max(worst, abs(tensor[v, profile] - row[v][col]))
    verdict("1", "three-player payoff tensor, 8 rows x 3 vertices x {WA, WS}", worst <= 1e-12, f"max error {worst:.1e}")


def test_02_simplex_invariance():
    rng = np.random.default_rng(2)
    worst_res, lowest = 0.0, 0.0
    for _ in range(50):
        g, spec, x = random_instance(rng, n=int(rng.integers(2, 7)), m=int(rng.integers(2, 4)))
        traj = integrate(g, spec, x, IntegratorOptions(t_end=50.0))
        worst_res = max(worst_res, traj.max_residual)
        lowest = min(lowest, traj.min_component, traj.states.min())
    ok = worst_res < 1e-6 and lowest > -1e-9
    verdict("2", "simplex invariance on 50 random instances", ok, f"max residual {worst_res:.1e}, min component {lowest:.1e}")


def test_03_classical_collapse():
    rng = np.random.default_rng(3)
    games = list(PRESETS.values()) + [rng.uniform(-2, 2, (3, 3))]
    worst = 0.0
    for B in games:
        m = len(B)
        y0 = rng.dirichlet(np.ones(m))
        ref = integrate_classical(B, y0, IntegratorOptions(t_end=50.0)).states[:, 0, :]
        for g in star_graphs().values():
            traj = integrate(g, GameSpec.uniform(B, 6, "WA"), StateProfile.homogeneous(y0, 6), IntegratorOptions(t_end=50.0))
            worst = max(worst, np.abs(traj.states - ref[:, None, :]).max())
    verdict("3", "homogeneous start follows the classical equation on all three stars", worst <= 1e-8, f"sup-norm {worst:.1e}")


def test_04_pure_profiles_are_rest_points():
    worst = 0.0
    count = 0
    for g in star_graphs().values():
        for B in PRESETS.values():
            spec = GameSpec.uniform(B, 6)
            for k in range(64):
                profile = tuple(1 + ((k >> i) & 1) for i in range(6))
                worst = max(worst, np.abs(replicator_rhs(g, spec, PureProfile(profile).to_state(2))).max())
                count += 1
    verdict("4", "pure profiles are exact rest points", worst == 0.0, f"{count} profiles, max |rhs| {worst!r}")


def test_05_nash_implies_rest_point():
    rng = np.random.default_rng(5)
    worst, checked = 0.0, 0
    for _ in range(60):
        g, spec, _ = random_instance(rng, n=int(rng.integers(2, 5)), m=int(rng.integers(2, 4)))
        for p in enumerate_pure_nash(g, spec).pure_nash:
            worst = max(worst, is_rest_point(g, spec, p.to_state(spec.m)).residual)
            checked += 1
    mixed = 0
    for B in PRESETS.values():
        eq = mixed_nash_2x2(B)
        if not eq:
            continue
        for g in star_graphs().values():
            for model in ("WA", "WS"):
                x = StateProfile.homogeneous(eq.point, 6)
                worst = max(worst, is_rest_point(g, GameSpec.uniform(B, 6, model), x).residual)
                mixed += 1
    ok = worst <= 1e-9 and checked > 0 and mixed > 0
    verdict("5", "Nash profiles are rest points", ok, f"{checked} pure + {mixed} mixed checked, max residual {worst:.1e}")


def test_06_bistable_endpoints():
    errors = {}
    for kind in KINDS:
        errors[f"a/{kind}"] = np.abs(endpoint(f"fig2_row_a_{kind}")[:, 0] - 1.0).max()
        errors[f"b/{kind}"] = np.abs(endpoint(f"fig2_row_b_{kind}")[:, 0] - 1.0).max()
    errors["c/open"] = np.abs(endpoint("fig2_row_c_open")[:, 0] - 0.5).max()
    errors["d/open"] = np.abs(endpoint("fig2_row_d_open")[:, 0]).max()
    worst = max(errors, key=errors.get)
    ok = all(e <= 1e-3 for e in errors.values())
    verdict("6", "bistable theta=1 endpoints at t=50", ok, f"worst {worst} off by {errors[worst]:.1e}")


def test_07_central_rebel_wins_at_theta_11():
    err = np.abs(endpoint("fig3_row_a_open")[:, 0]).max()
    verdict("7", "theta=1.1 central outlayer on the open star goes to strategy 2", err <= 1e-2, f"max x1 {err:.1e}")


def test_08a_homogeneous_prisoner_defects():
    worst = max(np.abs(endpoint(f"fig4_row_a_{kind}")[:, 0]).max() for kind in KINDS)
    verdict("8a", "prisoner theta=1.5 homogeneous start ends in defection at t=100", worst <= 1e-3, f"max x1 {worst:.4f} (tolerance 1e-3)")


def test_08b_cooperation_survives_somewhere():
    best = {}
    for row in "bcd":
        for kind in KINDS:
            best[f"{row}/{kind}"] = endpoint(f"fig4_row_{row}_{kind}")[:, 0].max()
    top = max(best, key=best.get)
    verdict("8b", "prisoner: some non-homogeneous start keeps a cooperator", best[top] > 0.1, f"{top} has x1 = {best[top]:.3f}")


def test_09_coexistence_mixed_point():
    worst = max(np.abs(endpoint(f"fig5_row_a_{kind}") - 0.5).max() for kind in KINDS)
    verdict("9", "coexistence homogeneous start reaches [0.5, 0.5]", worst <= 1e-3, f"max error {worst:.1e}")


def test_10_discrete_map_first_order():
    rng = np.random.default_rng(10)
    ratios = []
    for _ in range(20):
        g, spec, x = random_instance(rng)
        rhs = replicator_rhs(g, spec, x)
        x = np.asarray(x)
        err = [np.abs((discrete_step(g, spec, x, tau).states - x) / tau - rhs).max() for tau in (1e-3, 5e-4)]
        ratios.append(err[0] / err[1])
    lo, hi = min(ratios), max(ratios)
    ok = 1.8 <= lo and hi <= 2.2
    verdict("10", "discrete map error halves with the step", ok, f"ratios in [{lo:.4f}, {hi:.4f}]")


def test_11_enumeration_matches_oracle():
    rng = np.random.default_rng(11)
    mismatches = 0
    total = 0
    for _ in range(100):
        g, spec, _ = random_instance(rng, n=int(rng.integers(2, 5)), m=int(rng.integers(2, 4)))
        # quantized entries make ties likely, so weak equilibria get exercised too
        spec = GameSpec(np.round(spec.matrices), spec.model)
        found = enumerate_pure_nash(g, spec).as_set()
        total += len(found)
        mismatches += found != nash_oracle(g, spec)
    verdict("11", "pure Nash enumeration equals the exhaustive oracle", mismatches == 0, f"100 instances, {total} equilibria, {mismatches} mismatches")


def test_12_batch_is_deterministic(tmp_path):
    codes = [main(["batch", str(SHIPPED), "-j", str(j), "--out", str(tmp_path / f"run{j}")]) for j in (1, 4)]
    a, b = (sorted(p.name for p in (tmp_path / f"run{j}").iterdir()) for j in (1, 4))
    same = a == b and all((tmp_path / "run1" / n).read_bytes() == (tmp_path / "run4" / n).read_bytes() for n in a)
    ok = codes == [0, 0] and same and len(a) > 0
    verdict("12", "repeated batch gives byte-identical files", ok, f"{len(a)} files compared, exit codes {codes}")
