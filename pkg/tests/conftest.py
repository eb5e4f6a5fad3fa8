import json

import pytest

from segic import GameSpec


@pytest.fixture
def g0():
    """Reference game: symmetric coupling 0.5, noise 0.1, targets 0.5, cap 1."""
    return GameSpec(
        attenuation=[[1.0, 0.5], [0.5, 1.0]],
        noise=[0.1, 0.1],
        thresholds=[0.5, 0.5],
        p_max=1.0,
    )


G0_DICT = {
    "schema_version": 1,
    "n": 2,
    "a": [[1.0, 0.5], [0.5, 1.0]],
    "noise": [0.1, 0.1],
    "gammas": [0.5, 0.5],
    "p_max": 1.0,
}


@pytest.fixture
def g0_scenario(tmp_path):
    path = tmp_path / "g0.json"
    path.write_text(json.dumps(G0_DICT))
    return str(path)


@pytest.fixture
def infeasible_scenario(tmp_path):
    data = dict(G0_DICT, gammas=[1.0, 1.0])
    path = tmp_path / "g0_infeasible.json"
    path.write_text(json.dumps(data))
    return str(path)
