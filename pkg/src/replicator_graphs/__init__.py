"""Evolutionary game dynamics on finite weighted directed graphs.

Each vertex of a graph holds a mixed strategy and plays a two-player game
against its out-neighbors; strategy shares evolve by a replicator equation
driven by the weighted-average (WA) or weighted-sum (WS) payoff.
"""

from .dynamics import (
    IntegrationError,
    IntegratorOptions,
    StepSizeError,
    Trajectory,
    classical_rhs,
    detect_steady_state,
    discrete_step,
    integrate,
    integrate_classical,
    replicator_rhs,
)
from .equilibria import (
    EquilibriumReport,
    best_response_violation,
    enumerate_pure_nash,
    is_rest_point,
    mixed_nash_2x2,
)
from .graph import Graph, GraphError, NeighborhoodReport, build_star, make_graph, neighborhood
from .payoff import (
    GameSpec,
    NoOutNeighborsError,
    PayoffError,
    PayoffTensor,
    PureProfile,
    StateProfile,
    environment_vector,
    expected_payoff,
    payoff_tensor,
    pure_payoff,
    strategy_fitness,
)
from .scenario import (
    RunResult,
    ScenarioConfig,
    initial_condition,
    parse_scenario,
    run_batch,
    run_scenario,
    shipped_scenarios,
)

__version__ = "0.1.0"
