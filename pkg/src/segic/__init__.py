"""Satisfaction equilibria of Gaussian interference channel power games."""

from .model import (
    GameSpec,
    InvalidInputError,
    RawChannel,
    cost_ratio,
    game_from_raw,
    interference,
    is_satisfied,
    min_satisfying_power,
    min_satisfying_powers,
    normalize,
    raw_utility,
    utilities,
    utility,
)
from .analysis import (
    DimensionError,
    EquilibriumReport,
    NoEquilibriumError,
    SERegionSystem,
    analyze,
    build_system,
    ese_two_player,
    exists_two_player,
    is_efficient_se,
    is_satisfaction_equilibrium,
    is_valued_se,
    satisfaction_response_dynamics,
    solve_ese,
)
from .oracle import OracleResult, ResourceLimitError, enumerate_grid
from .metrics import (
    MetricsReport,
    max_price_of_satisfaction,
    metrics_report,
    price_of_efficiency,
    summed_cost_ratio,
)
from .scenario import ScenarioError, load_scenario, write_scenario

__version__ = "0.1.0"
