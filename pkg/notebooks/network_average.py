"""
Time course of the network average
==================================

Runs the two time-course scenarios and prints the mean share of strategy 1
over the six vertices every 10 time units.  The same numbers are written to
``*_average.csv`` for plotting with any external tool.
"""

from replicator_graphs.scenario import parse_scenario, run_scenario, scenario_dir

for name in ("fig6_prisoner_timecourse", "fig6_coexistence_timecourse"):
    cfg = parse_scenario(scenario_dir() / f"{name}.json")
    res = run_scenario(cfg, out_dir="out/notebooks")
    traj = res.trajectory
    print(f"\n{name} (steady state: {res.steady_time})")
    for t, x in zip(traj.times, traj.states):
        if abs(t % 10) < 1e-9:
            print(f"  t={t:5.0f}  mean x1={x[:, 0].mean():.4f}")
    print("  files:", *res.written, sep="\n    ")
