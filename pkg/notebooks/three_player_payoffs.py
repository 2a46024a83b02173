"""
Payoffs of a three-player game on a weighted graph
==================================================

Every vertex plays the same 2x2 game against the weighted mix of its
out-neighbors.  Here we build a small directed graph, list its full payoff
tensor under both payoff models and look at the pure Nash equilibria.
"""

import numpy as np

from replicator_graphs import GameSpec, enumerate_pure_nash, make_graph, payoff_tensor

# vertices are 0-indexed in code; printed profiles use strategies 1 and 2
mu = 1.0
g = make_graph(3, [(0, 1, 1.0), (0, 2, mu), (1, 0, mu), (1, 2, 2 * mu), (2, 1, mu)])
print(g.weights)
print("weight sums", g.weight_sums)

B = [[1, 2], [3, 4]]

###############################################################################
# WA divides by the weight sum, WS does not

for model in ("WA", "WS"):
    tensor = payoff_tensor(g, GameSpec.uniform(B, 3, model))
    print(f"\n{model}")
    for profile, pay in tensor.rows():
        print(profile, np.round(pay, 4))

###############################################################################
# With this matrix strategy 2 dominates, so (2, 2, 2) is the only equilibrium

report = enumerate_pure_nash(g, GameSpec.uniform(B, 3))
for e in report.nash:
    print(e.profile.strategies, "strict" if e.strict else "weak")

# a coordination game has two
report = enumerate_pure_nash(g, GameSpec.uniform([[1, 0], [0, 1]], 3))
print(sorted(report.as_set()))
