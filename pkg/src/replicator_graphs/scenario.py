"""Declarative scenarios: JSON config -> graph, game, initial state -> run -> CSV.

Scenario files use 1-indexed vertex labels (vertex 1 is the hub of a star)
and 1-indexed strategies.  See ``docs/scenario_schema.md`` for the format.
"""

from __future__ import annotations

import json
import os
from contextlib import contextmanager
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, replace
from importlib import resources
from pathlib import Path
from typing import Any

import numpy as np

from .dynamics import IntegrationError, IntegratorOptions, StepSizeError, Trajectory, detect_steady_state, integrate
from .equilibria import enumerate_pure_nash
from .graph import STAR_KINDS, Graph, GraphError, build_star, closed_star_edges, make_graph
from .payoff import MODELS, GameSpec, PayoffError, StateProfile, payoff_tensor

__all__ = [
    "GAME_PRESETS",
    "IC_PRESETS",
    "OUTPUT_KINDS",
    "OUT_DIR_ENV",
    "BatchFailure",
    "RunResult",
    "ScenarioConfig",
    "ScenarioError",
    "ScenarioParseError",
    "ScenarioValidationError",
    "bistable",
    "coexistence",
    "emit_average",
    "emit_equilibria",
    "emit_snapshot",
    "emit_tensor",
    "emit_timecourse",
    "initial_condition",
    "load_scenario",
    "parse_scenario",
    "prisoner",
    "run_batch",
    "run_scenario",
    "shipped_scenarios",
]

OUT_DIR_ENV = "REPLICATOR_GRAPHS_OUT"
GAME_PRESETS = ("bistable", "prisoner", "coexistence")
IC_PRESETS = ("homogeneous", "external_outlayer", "central_outlayer", "external_central")
OUTPUT_KINDS = ("timecourse", "snapshot", "average", "tensor", "equilibria")
QUASI_PURE = 0.99


class ScenarioError(Exception):
    """Base class; ``exit_code`` is what the CLI returns for this failure."""

    exit_code = 1


class ScenarioParseError(ScenarioError):
    exit_code = 3


class ScenarioValidationError(ScenarioError):
    exit_code = 4


class ScenarioRunError(ScenarioError):
    exit_code = 5


class ScenarioIOError(ScenarioError):
    exit_code = 6


def bistable(theta: float) -> np.ndarray:
    """Two strict pure equilibria, interior one at ``[theta, 1] / (1 + theta)``."""
    return np.array([[1.0, 0.0], [0.0, float(theta)]])


def prisoner(theta: float) -> np.ndarray:
    """Prisoner's dilemma variant: strategy 1 cooperates, 2 defects."""
    return np.array([[1.0, 0.0], [float(theta), 0.0]])


def coexistence() -> np.ndarray:
    return np.array([[0.0, 1.0], [1.0, 0.0]])


def initial_condition(preset: str, n: int, q: float = QUASI_PURE) -> StateProfile:
    """Quasi-pure starting states of the star-graph experiments.

    Everybody starts at ``[q, 1-q]`` except the "outlayers", which start at
    ``[1-q, q]``: none (homogeneous), peripheral vertex 2 (external), the
    hub (central) or both (external_central).  Labels are 1-indexed.
    """
    if preset not in IC_PRESETS:
        raise ScenarioValidationError(
            f"unknown initial_condition preset {preset!r}; valid: {', '.join(IC_PRESETS)}"
        )
    if n < 3:
        raise ScenarioValidationError(f"initial_condition presets need n >= 3, got {n}")
    if not 0.5 < q <= 1.0:
        raise ScenarioValidationError(f"initial_condition.q must lie in (0.5, 1], got {q!r}")
    x = np.tile([q, 1.0 - q], (n, 1))
    rebels = {
        "homogeneous": [],
        "external_outlayer": [1],
        "central_outlayer": [0],
        "external_central": [0, 1],
    }[preset]
    for v in rebels:
        x[v] = [1.0 - q, q]
    return StateProfile(x)


# ---------------------------------------------------------------- config types


@dataclass(frozen=True)
class GraphConfig:
    type: str
    n: int
    kind: str | None = None
    heavy_weight: float = 3.0
    heavy_edges: tuple = ()
    edges: tuple = ()

    def build(self) -> Graph:
        try:
            if self.type == "star":
                return build_star(
                    self.kind, self.n, self.heavy_weight, [(v - 1, w - 1) for v, w in self.heavy_edges]
                )
            return make_graph(self.n, [(v - 1, w - 1, a) for v, w, a in self.edges])
        except GraphError as exc:
            raise ScenarioValidationError(f"graph: {exc}") from None

    def to_dict(self) -> dict:
        if self.type == "star":
            d = {"type": "star", "kind": self.kind, "n": self.n}
            if self.kind == "weighted_asymmetric":
                d["heavy_weight"] = self.heavy_weight
                d["heavy_edges"] = [list(e) for e in self.heavy_edges]
            return d
        return {"type": "edges", "n": self.n, "edges": [list(e) for e in self.edges]}


@dataclass(frozen=True)
class GameConfig:
    model: str = "WA"
    preset: str | None = None
    theta: float | None = None
    matrices: tuple | None = None  # per-vertex, or one shared matrix

    def matrix_stack(self, n: int) -> np.ndarray:
        if self.preset is not None:
            b = {"bistable": bistable, "prisoner": prisoner}.get(self.preset)
            m = b(self.theta) if b else coexistence()
            return np.broadcast_to(m, (n, 2, 2))
        arr = np.array(self.matrices, dtype=float)
        if arr.ndim == 2:
            return np.broadcast_to(arr, (n,) + arr.shape)
        return arr

    def to_dict(self) -> dict:
        d: dict[str, Any] = {"model": self.model}
        if self.preset is not None:
            d["preset"] = self.preset
            if self.preset != "coexistence":
                d["theta"] = self.theta
        else:
            d["matrices"] = _lists(self.matrices)
        return d


@dataclass(frozen=True)
class ICConfig:
    preset: str | None = None
    q: float = QUASI_PURE
    states: tuple | None = None

    def build(self, n: int) -> StateProfile:
        if self.preset is not None:
            return initial_condition(self.preset, n, self.q)
        try:
            return StateProfile(np.array(self.states, dtype=float))
        except PayoffError as exc:
            raise ScenarioValidationError(f"initial_condition.states: {exc}") from None

    def to_dict(self) -> dict:
        if self.preset is not None:
            return {"preset": self.preset, "q": self.q}
        return {"states": _lists(self.states)}


@dataclass(frozen=True)
class RunConfig:
    dt: float = 1e-3
    t_end: float = 50.0
    renormalize_every: int = 100
    clamp_negatives: bool = True
    sample_every: int = 100
    eps: float = 1e-6
    window: float = 5.0

    def options(self) -> IntegratorOptions:
        try:
            return IntegratorOptions(
                dt=self.dt,
                t_end=self.t_end,
                renormalize_every=self.renormalize_every,
                clamp_negatives=self.clamp_negatives,
                sample_every=self.sample_every,
            )
        except StepSizeError as exc:
            raise ScenarioValidationError(f"run: {exc}") from None


@dataclass(frozen=True)
class OutputSpec:
    kind: str
    path: str


@dataclass(frozen=True)
class ScenarioConfig:
    id: str
    graph: GraphConfig
    game: GameConfig
    initial_condition: ICConfig
    run: RunConfig = field(default_factory=RunConfig)
    outputs: tuple = ()
    description: str = ""

    def to_dict(self) -> dict:
        d = {"id": self.id}
        if self.description:
            d["description"] = self.description
        d["graph"] = self.graph.to_dict()
        d["game"] = self.game.to_dict()
        d["initial_condition"] = self.initial_condition.to_dict()
        d["run"] = asdict(self.run)
        d["outputs"] = [asdict(o) for o in self.outputs]
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def with_overrides(self, dt=None, t_end=None, eps=None) -> "ScenarioConfig":
        changes = {k: v for k, v in (("dt", dt), ("t_end", t_end), ("eps", eps)) if v is not None}
        if not changes:
            return self
        cfg = replace(self, run=replace(self.run, **changes))
        cfg.run.options()
        if not cfg.run.eps > 0:
            raise ScenarioValidationError(f"run.eps must be positive, got {cfg.run.eps}")
        if cfg.run.window > cfg.run.t_end:
            raise ScenarioValidationError(f"run.window ({cfg.run.window}) exceeds run.t_end ({cfg.run.t_end})")
        return cfg

    def build(self) -> tuple[Graph, GameSpec, StateProfile]:
        g = self.graph.build()
        try:
            spec = GameSpec(self.game.matrix_stack(g.n), self.game.model)
        except PayoffError as exc:
            raise ScenarioValidationError(f"game: {exc}") from None
        if spec.n != g.n:
            raise ScenarioValidationError(
                f"game.matrices has {spec.n} matrices but graph.n is {g.n}"
            )
        x0 = self.initial_condition.build(g.n)
        if x0.n != g.n:
            raise ScenarioValidationError(
                f"initial_condition.states has {x0.n} vectors but graph.n is {g.n}"
            )
        if x0.m != spec.m:
            raise ScenarioValidationError(
                f"initial_condition.states have {x0.m} strategies but game matrices are {spec.m}x{spec.m}"
            )
        return g, spec, x0


def _lists(x):
    if isinstance(x, (tuple, list)):
        return [_lists(i) for i in x]
    return x


def _tuples(x):
    if isinstance(x, (tuple, list)):
        return tuple(_tuples(i) for i in x)
    return x


# ------------------------------------------------------------------- parsing


def _require(d: dict, key: str, where: str):
    if key not in d:
        raise ScenarioValidationError(f"{where}: missing required field {key!r}")
    return d[key]


def _number(value, where: str, integer: bool = False):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ScenarioValidationError(f"{where}: expected a number, got {value!r}")
    if integer:
        if int(value) != value:
            raise ScenarioValidationError(f"{where}: expected an integer, got {value!r}")
        return int(value)
    return float(value)


def _unknown(d: dict, allowed: set, where: str) -> None:
    extra = set(d) - allowed
    if extra:
        raise ScenarioValidationError(f"{where}: unknown field(s) {', '.join(sorted(extra))}")


def _check_label(v: int, n: int, where: str) -> int:
    if not 1 <= v <= n:
        raise ScenarioValidationError(f"{where}: vertex {v} out of range 1..{n}")
    return v


def _parse_graph(d) -> GraphConfig:
    if not isinstance(d, dict):
        raise ScenarioValidationError("graph: expected an object")
    gtype = d.get("type", "star" if "kind" in d else "edges")
    n = _number(_require(d, "n", "graph"), "graph.n", integer=True)
    if gtype == "star":
        _unknown(d, {"type", "kind", "n", "heavy_weight", "heavy_edges"}, "graph")
        kind = _require(d, "kind", "graph")
        if kind not in STAR_KINDS:
            raise ScenarioValidationError(
                f"graph.kind: unknown star kind {kind!r}; valid: {', '.join(STAR_KINDS)}"
            )
        heavy = d.get("heavy_edges", [])
        if kind != "weighted_asymmetric" and heavy:
            raise ScenarioValidationError("graph.heavy_edges only applies to kind 'weighted_asymmetric'")
        edges = []
        for e in heavy:
            if not isinstance(e, list) or len(e) != 2:
                raise ScenarioValidationError(f"graph.heavy_edges: expected [v, w] pairs, got {e!r}")
            v, w = (_number(u, "graph.heavy_edges", integer=True) for u in e)
            edges.append((_check_label(v, n, "graph.heavy_edges"), _check_label(w, n, "graph.heavy_edges")))
        allowed = {(v + 1, w + 1) for v, w in closed_star_edges(n)} if n >= 3 else set()
        for v, w in edges:
            if (v, w) not in allowed and (w, v) not in allowed:
                raise ScenarioValidationError(f"graph.heavy_edges: [{v}, {w}] is not an edge of the closed star")
        hw = _number(d.get("heavy_weight", 3.0), "graph.heavy_weight")
        return GraphConfig("star", n, kind=kind, heavy_weight=hw, heavy_edges=tuple(edges))
    if gtype == "edges":
        _unknown(d, {"type", "n", "edges"}, "graph")
        edges = []
        for e in _require(d, "edges", "graph"):
            if not isinstance(e, list) or len(e) != 3:
                raise ScenarioValidationError(f"graph.edges: expected [from, to, weight], got {e!r}")
            edges.append(
                (
                    _check_label(_number(e[0], "graph.edges", integer=True), n, "graph.edges"),
                    _check_label(_number(e[1], "graph.edges", integer=True), n, "graph.edges"),
                    _number(e[2], "graph.edges"),
                )
            )
        seen = set()
        for v, w, _ in edges:
            if v == w:
                raise ScenarioValidationError(f"graph.edges: self-loop on vertex {v}")
            if (v, w) in seen:
                raise ScenarioValidationError(f"graph.edges: duplicate edge [{v}, {w}]")
            seen.add((v, w))
        return GraphConfig("edges", n, edges=tuple(edges))
    raise ScenarioValidationError(f"graph.type: unknown graph type {gtype!r}; valid: star, edges")


def _parse_game(d) -> GameConfig:
    if not isinstance(d, dict):
        raise ScenarioValidationError("game: expected an object")
    _unknown(d, {"model", "preset", "theta", "matrix", "matrices"}, "game")
    model = d.get("model", "WA")
    if model not in MODELS:
        raise ScenarioValidationError(f"game.model: unknown payoff model {model!r}; valid: WA, WS")
    if "preset" in d:
        preset = d["preset"]
        if preset not in GAME_PRESETS:
            raise ScenarioValidationError(
                f"game.preset: unknown preset {preset!r}; valid: {', '.join(GAME_PRESETS)}"
            )
        if preset == "coexistence":
            if "theta" in d:
                raise ScenarioValidationError("game.theta: the coexistence preset takes no theta")
            return GameConfig(model=model, preset=preset)
        theta = _number(_require(d, "theta", "game"), "game.theta")
        if preset == "bistable" and not theta > 0:
            raise ScenarioValidationError(f"game.theta: bistable requires theta > 0, got {theta}")
        if preset == "prisoner" and not theta > 1:
            raise ScenarioValidationError(f"game.theta: prisoner requires theta > 1, got {theta}")
        return GameConfig(model=model, preset=preset, theta=theta)
    raw = d.get("matrices", d.get("matrix"))
    if raw is None:
        raise ScenarioValidationError("game: need one of 'preset', 'matrix' or 'matrices'")
    try:
        arr = np.array(raw, dtype=float)
    except (TypeError, ValueError):
        raise ScenarioValidationError("game.matrices: ragged or non-numeric matrix data") from None
    if arr.ndim not in (2, 3) or arr.shape[-1] != arr.shape[-2]:
        raise ScenarioValidationError(f"game.matrices: expected square matrices, got shape {arr.shape}")
    return GameConfig(model=model, matrices=_tuples(arr.tolist()))


def _parse_ic(d) -> ICConfig:
    if not isinstance(d, dict):
        raise ScenarioValidationError("initial_condition: expected an object")
    _unknown(d, {"preset", "q", "states"}, "initial_condition")
    if "preset" in d:
        preset = d["preset"]
        if preset not in IC_PRESETS:
            raise ScenarioValidationError(
                f"initial_condition.preset: unknown preset {preset!r}; valid: {', '.join(IC_PRESETS)}"
            )
        return ICConfig(preset=preset, q=_number(d.get("q", QUASI_PURE), "initial_condition.q"))
    states = _require(d, "states", "initial_condition")
    try:
        arr = np.array(states, dtype=float)
    except (TypeError, ValueError):
        raise ScenarioValidationError("initial_condition.states: ragged or non-numeric data") from None
    if arr.ndim != 2:
        raise ScenarioValidationError("initial_condition.states: expected a list of vectors")
    return ICConfig(states=_tuples(arr.tolist()))


def _parse_run(d) -> RunConfig:
    if not isinstance(d, dict):
        raise ScenarioValidationError("run: expected an object")
    _unknown(d, set(RunConfig.__dataclass_fields__), "run")
    base = RunConfig()
    kw = {}
    for name in ("dt", "t_end", "eps", "window"):
        kw[name] = _number(d.get(name, getattr(base, name)), f"run.{name}")
    for name in ("renormalize_every", "sample_every"):
        kw[name] = _number(d.get(name, getattr(base, name)), f"run.{name}", integer=True)
    clamp = d.get("clamp_negatives", True)
    if not isinstance(clamp, bool):
        raise ScenarioValidationError(f"run.clamp_negatives: expected true/false, got {clamp!r}")
    cfg = RunConfig(clamp_negatives=clamp, **kw)
    cfg.options()
    if not cfg.eps > 0 or not cfg.window > 0:
        raise ScenarioValidationError("run: eps and window must be positive")
    if cfg.window > cfg.t_end:
        raise ScenarioValidationError(f"run.window ({cfg.window}) exceeds run.t_end ({cfg.t_end})")
    return cfg


def _parse_outputs(items) -> tuple:
    if not isinstance(items, list):
        raise ScenarioValidationError("outputs: expected a list")
    out = []
    for o in items:
        if not isinstance(o, dict) or set(o) != {"kind", "path"}:
            raise ScenarioValidationError(f"outputs: each entry needs exactly 'kind' and 'path', got {o!r}")
        if o["kind"] not in OUTPUT_KINDS:
            raise ScenarioValidationError(
                f"outputs.kind: unknown output {o['kind']!r}; valid: {', '.join(OUTPUT_KINDS)}"
            )
        out.append(OutputSpec(o["kind"], str(o["path"])))
    return tuple(out)


def load_scenario(data: dict) -> ScenarioConfig:
    """Validate an already-decoded scenario document."""
    if not isinstance(data, dict):
        raise ScenarioValidationError("scenario: top level must be an object")
    _unknown(data, {"id", "description", "graph", "game", "initial_condition", "run", "outputs"}, "scenario")
    sid = _require(data, "id", "scenario")
    if not isinstance(sid, str) or not sid:
        raise ScenarioValidationError("id: expected a non-empty string")
    cfg = ScenarioConfig(
        id=sid,
        description=str(data.get("description", "")),
        graph=_parse_graph(_require(data, "graph", "scenario")),
        game=_parse_game(_require(data, "game", "scenario")),
        initial_condition=_parse_ic(_require(data, "initial_condition", "scenario")),
        run=_parse_run(data.get("run", {})),
        outputs=_parse_outputs(data.get("outputs", [])),
    )
    cfg.build()
    return cfg


def parse_scenario(path) -> ScenarioConfig:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ScenarioIOError(f"{path}: {exc.strerror or exc}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioParseError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    try:
        return load_scenario(data)
    except ScenarioValidationError as exc:
        raise ScenarioValidationError(f"{path}: {exc}") from None


# ------------------------------------------------------------------- outputs


def _fmt(x: float) -> str:
    return f"{x:.12g}"


@contextmanager
def _open_for_write(target):
    """Yield a text stream for ``target`` (a path, or an object with ``write``)."""
    if hasattr(target, "write"):
        yield target
        return
    path = Path(target)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        fh = open(path, "w", encoding="utf-8", newline="\n")
    except OSError as exc:
        raise ScenarioIOError(f"cannot write {path}: {exc.strerror or exc}") from None
    with fh:
        yield fh


def emit_timecourse(traj: Trajectory, path) -> None:
    """Long format ``t,vertex,strategy,x``, 1-indexed, ordered by (t, vertex, strategy)."""
    with _open_for_write(path) as fh:
        fh.write("t,vertex,strategy,x\n")
        for t, x in zip(traj.times, traj.states):
            ts = _fmt(t)
            for v, row in enumerate(x, start=1):
                for s, val in enumerate(row, start=1):
                    fh.write(f"{ts},{v},{s},{_fmt(val)}\n")


def emit_average(traj: Trajectory, path) -> None:
    m = traj.states.shape[2]
    with _open_for_write(path) as fh:
        fh.write("t," + ",".join(f"mean_x{s}" for s in range(1, m + 1)) + "\n")
        for t, x in zip(traj.times, traj.states):
            fh.write(_fmt(t) + "," + ",".join(_fmt(v) for v in x.mean(axis=0)) + "\n")


def emit_snapshot(result: "RunResult", path) -> None:
    """Final state as ``vertex,x1,...,xM``."""
    x = result.final_state.states
    with _open_for_write(path) as fh:
        fh.write("vertex," + ",".join(f"x{s}" for s in range(1, x.shape[1] + 1)) + "\n")
        for v, row in enumerate(x, start=1):
            fh.write(f"{v}," + ",".join(_fmt(val) for val in row) + "\n")


def emit_tensor(g: Graph, spec: GameSpec, path) -> None:
    try:
        tensor = payoff_tensor(g, spec)
    except PayoffError as exc:
        raise ScenarioValidationError(str(exc)) from None
    n = g.n
    with _open_for_write(path) as fh:
        fh.write(",".join([f"s_{v}" for v in range(1, n + 1)] + [f"pi_{v}" for v in range(1, n + 1)]) + "\n")
        for profile, pay in tensor.rows():
            fh.write(",".join([str(s) for s in profile] + [_fmt(p) for p in pay]) + "\n")


def emit_equilibria(g: Graph, spec: GameSpec, path) -> None:
    try:
        report = enumerate_pure_nash(g, spec)
    except PayoffError as exc:
        raise ScenarioValidationError(str(exc)) from None
    with _open_for_write(path) as fh:
        fh.write(",".join([f"s_{v}" for v in range(1, g.n + 1)] + ["strict"]) + "\n")
        for e in report.nash:
            fh.write(",".join([str(s) for s in e.profile] + [str(e.strict).lower()]) + "\n")


# ---------------------------------------------------------------------- runs


@dataclass
class RunResult:
    scenario_id: str
    trajectory: Trajectory
    steady_time: float | None
    written: tuple = ()

    @property
    def final_state(self) -> StateProfile:
        return StateProfile(self.trajectory.states[-1])


@dataclass(frozen=True)
class BatchFailure:
    """Per-item error from :func:`run_batch`."""

    path: str
    error: str
    exit_code: int

    def __bool__(self):
        return False


def default_out_dir() -> Path:
    return Path(os.environ.get(OUT_DIR_ENV, "out"))


def run_scenario(cfg: ScenarioConfig, out_dir=None) -> RunResult:
    """Integrate a scenario, detect its steady state and write requested outputs.

    Relative output paths are resolved against ``out_dir`` (default: the
    ``REPLICATOR_GRAPHS_OUT`` environment variable, else ``./out``).
    """
    g, spec, x0 = cfg.build()
    try:
        traj = integrate(g, spec, x0, cfg.run.options())
    except IntegrationError as exc:
        raise ScenarioRunError(f"scenario {cfg.id}: {exc}") from None
    steady = detect_steady_state(traj, g, spec, cfg.run.eps, cfg.run.window)
    result = RunResult(cfg.id, traj, steady)
    base = Path(out_dir) if out_dir is not None else default_out_dir()
    written = []
    for o in cfg.outputs:
        p = Path(o.path)
        p = p if p.is_absolute() else base / p
        if o.kind == "timecourse":
            emit_timecourse(traj, p)
        elif o.kind == "snapshot":
            emit_snapshot(result, p)
        elif o.kind == "average":
            emit_average(traj, p)
        elif o.kind == "tensor":
            emit_tensor(g, spec, p)
        else:
            emit_equilibria(g, spec, p)
        written.append(str(p))
    result.written = tuple(written)
    return result


def _batch_item(args):
    path, out_dir = args
    try:
        return run_scenario(parse_scenario(path), out_dir=out_dir)
    except ScenarioError as exc:
        return BatchFailure(str(path), str(exc), exc.exit_code)
    except Exception as exc:  # keep the rest of the batch alive
        return BatchFailure(str(path), f"{type(exc).__name__}: {exc}", 1)


def run_batch(paths, parallelism: int = 1, out_dir=None) -> list:
    """Run many scenario files; results come back in input order.

    Failures are returned in place as :class:`BatchFailure` items.
    """
    if parallelism < 1:
        raise ValueError(f"parallelism must be positive, got {parallelism}")
    items = [(str(p), out_dir) for p in paths]
    if parallelism == 1 or len(items) <= 1:
        return [_batch_item(i) for i in items]
    with ProcessPoolExecutor(max_workers=parallelism) as pool:
        return list(pool.map(_batch_item, items))


def shipped_scenarios() -> list[Path]:
    """Paths of the figure-reproduction scenarios bundled with the package."""
    root = resources.files("replicator_graphs") / "scenarios"
    return sorted(Path(str(p)) for p in root.iterdir() if p.name.endswith(".json"))


def scenario_dir() -> Path:
    return Path(str(resources.files("replicator_graphs") / "scenarios"))
