import math

import numpy as np
import pytest

from hexwalk import CoinParams, CoinState, build_coin

import _report


def random_theta(rng: np.random.Generator, margin: float = 0.05) -> float:
    """A coin angle sampled uniformly, bounded away from the degenerate angles."""
    while True:
        theta = rng.uniform(0.0, 2.0 * math.pi)
        if min(theta, abs(theta - math.pi), 2.0 * math.pi - theta) > margin:
            return theta


def random_state(rng: np.random.Generator) -> CoinState:
    v = rng.normal(size=3) + 1j * rng.normal(size=3)
    v /= np.linalg.norm(v)
    return CoinState(v[0], v[1], v[2])


@pytest.fixture(scope="session")
def grover_params():
    return CoinParams.grover()


@pytest.fixture(scope="session")
def grover_coin(grover_params):
    return build_coin(grover_params)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _report.lines:
        terminalreporter.write_sep("-", "acceptance criteria")
        for line in _report.lines:
            terminalreporter.write_line(line)
