"""Shared random-game samplers for the property and acceptance suites."""

import numpy as np

from segic import GameSpec, exists_two_player, solve_ese
from segic.analysis import NoEquilibriumError

P_MAX = 10.0


def _log_uniform(rng, lo, hi, size):
    return 10.0 ** rng.uniform(np.log10(lo), np.log10(hi), size)


def random_two_player(
    rng,
    a_range=(1e-2, 1e1),
    g_range=(1e-2, 1e1),
    i_range=(1e-2, 1e1),
    p_max=P_MAX,
) -> GameSpec:
    """Log-uniform two-player draw; default ranges stress all regimes."""
    a12, a21 = _log_uniform(rng, *a_range, 2)
    g1, g2 = _log_uniform(rng, *g_range, 2)
    i1, i2 = _log_uniform(rng, *i_range, 2)
    return GameSpec(
        attenuation=[[1.0, a12], [a21, 1.0]],
        noise=[i1, i2],
        thresholds=[g1, g2],
        p_max=p_max,
    )


def weak_coupling_two_player(rng, p_max=P_MAX) -> GameSpec:
    """Physically typical regime: cross-gains below direct gains, modest targets."""
    return random_two_player(
        rng,
        a_range=(0.05, 0.5),
        g_range=(0.1, 1.0),
        i_range=(0.01, 1.0),
        p_max=p_max,
    )


def try_ese(game: GameSpec):
    try:
        return solve_ese(game)
    except NoEquilibriumError:
        return None


def draw_feasible_in_box(rng, count, draw=weak_coupling_two_player):
    """Rejection-sample games whose ESE exists and fits in the power box."""
    games = []
    while len(games) < count:
        game = draw(rng)
        if not exists_two_player(game)[0]:
            continue
        ese = solve_ese(game)
        if np.all(ese <= game.p_max):
            games.append((game, ese))
    return games
