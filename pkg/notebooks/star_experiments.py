"""
Who wins on a star?
===================

Six players on three star-shaped graphs: the open star (hub plus five
leaves), the closed star (leaves also joined in a ring) and an asymmetric
version of the closed star where some edges weigh 3.

Every player starts close to strategy 1 (share 0.99) except a few
"rebels" that start close to strategy 2.  The final share of strategy 1
at each vertex is the numeric counterpart of a colored-vertex picture.
"""

import numpy as np

from replicator_graphs.scenario import parse_scenario, run_scenario, scenario_dir

root = scenario_dir()
rows = {"a": "nobody rebels", "b": "one leaf rebels", "c": "the hub rebels", "d": "hub and a leaf rebel"}

###############################################################################
# Two strict equilibria (theta = 1): strategy 1 usually spreads, but a
# rebellious hub on the open star drags everyone to the mixed point

for game in ("fig2", "fig4", "fig5"):
    print(f"\n== {game} ==")
    for row, label in rows.items():
        for kind in ("open", "closed", "weighted"):
            cfg = parse_scenario(root / f"{game}_row_{row}_{kind}.json")
            res = run_scenario(cfg, out_dir="out/notebooks")
            x1 = res.final_state.states[:, 0]
            print(f"{label:22s} {kind:9s}", np.array2string(x1, precision=3, suppress_small=True))

###############################################################################
# fig4 is a prisoner's dilemma: starting from all-cooperate the share of
# cooperation shrinks like 1/t rather than exponentially, so at t=100 it is
# still a couple of percent.  Some rebel placements leave a cooperator
# standing because its only neighbors are indifferent defectors.
