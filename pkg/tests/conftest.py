import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20240809)


def bidisc_points(rng, count):
    """Uniform random points of the closed unit bidisc, as (zs, ws)."""
    radius = np.sqrt(rng.uniform(0.0, 1.0, count))
    zs = radius * np.exp(1j * rng.uniform(0.0, 2.0 * np.pi, count))
    radius = np.sqrt(rng.uniform(0.0, 1.0, count))
    ws = radius * np.exp(1j * rng.uniform(0.0, 2.0 * np.pi, count))
    return zs, ws
