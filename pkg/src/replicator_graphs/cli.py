"""Command-line entry point: ``replicator-graphs``.

Exit codes: 0 success, 2 usage, 3 parse error, 4 validation error,
5 integration failure, 6 I/O error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .scenario import (
    BatchFailure,
    ScenarioError,
    default_out_dir,
    emit_equilibria,
    emit_tensor,
    parse_scenario,
    run_batch,
    run_scenario,
    scenario_dir,
    shipped_scenarios,
)


def _load(args):
    cfg = parse_scenario(args.config)
    return cfg.with_overrides(
        dt=getattr(args, "dt", None), t_end=getattr(args, "t_end", None), eps=getattr(args, "eps", None)
    )


def _out_dir(args) -> Path:
    return Path(args.out) if args.out else default_out_dir()


def cmd_simulate(args) -> int:
    cfg = _load(args)
    result = run_scenario(cfg, out_dir=_out_dir(args))
    steady = "never" if result.steady_time is None else f"t={result.steady_time:.6g}"
    print(f"{cfg.id}: t_end={cfg.run.t_end:g}, steady state {steady}")
    for v, row in enumerate(result.final_state.states, start=1):
        print(f"  vertex {v}: " + " ".join(f"{x:.6f}" for x in row))
    for p in result.written:
        print(f"wrote {p}")
    return 0


def cmd_batch(args) -> int:
    paths = sorted(Path(args.dir).glob("*.json"))
    if not paths:
        print(f"no scenario files in {args.dir}", file=sys.stderr)
        return 6
    results = run_batch(paths, parallelism=args.jobs, out_dir=_out_dir(args))
    code = 0
    for path, r in zip(paths, results):
        if isinstance(r, BatchFailure):
            print(f"FAIL {path.name}: {r.error}", file=sys.stderr)
            code = code or r.exit_code
        else:
            steady = "-" if r.steady_time is None else f"{r.steady_time:.6g}"
            print(f"ok   {r.scenario_id} steady={steady}")
    return code


def _emit(args, fn) -> int:
    cfg = _load(args)
    g, spec, _ = cfg.build()
    target = Path(args.output) if args.output else _out_dir(args) / f"{cfg.id}_{args.command}.csv"
    if args.output == "-":
        fn(g, spec, sys.stdout)
        return 0
    fn(g, spec, target)
    print(f"wrote {target}")
    return 0


def cmd_scenarios(args) -> int:
    if args.action == "path":
        print(scenario_dir())
        return 0
    for p in shipped_scenarios():
        print(p.stem)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="replicator-graphs", description="Replicator dynamics on weighted graphs"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, overrides=True):
        p.add_argument("--out", help="output directory (default: $REPLICATOR_GRAPHS_OUT or ./out)")
        if overrides:
            p.add_argument("--dt", type=float, help="override run.dt")
            p.add_argument("--t-end", dest="t_end", type=float, help="override run.t_end")
            p.add_argument("--eps", type=float, help="override run.eps")

    p = sub.add_parser("simulate", help="run one scenario file")
    p.add_argument("config")
    add_common(p)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("batch", help="run every *.json scenario in a directory")
    p.add_argument("dir")
    p.add_argument("-j", "--jobs", type=int, default=1, help="parallel worker processes")
    add_common(p, overrides=False)
    p.set_defaults(func=cmd_batch)

    for name, fn, what in (
        ("tensor", emit_tensor, "payoff tensor"),
        ("equilibria", emit_equilibria, "pure Nash equilibria"),
    ):
        p = sub.add_parser(name, help=f"write the {what} of a scenario's game as CSV")
        p.add_argument("config")
        p.add_argument("-o", "--output", help="output file, '-' for stdout")
        add_common(p, overrides=False)
        p.set_defaults(func=lambda a, fn=fn: _emit(a, fn))

    p = sub.add_parser("scenarios", help="inspect the bundled figure scenarios")
    p.add_argument("action", choices=["list", "path"])
    p.set_defaults(func=cmd_scenarios)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ScenarioError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
