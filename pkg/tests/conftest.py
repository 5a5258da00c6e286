import numpy as np
import pytest

from softmotion import KinematicLimits


@pytest.fixture
def lin() -> KinematicLimits:
    """Default linear limits used throughout the examples."""
    return KinematicLimits(jmax=0.900, amax=0.300, vmax=0.150)


@pytest.fixture
def ang() -> KinematicLimits:
    """Default angular limits."""
    return KinematicLimits(jmax=0.600, amax=0.200, vmax=0.100)


def random_boundary(rng: np.random.Generator, limits: KinematicLimits,
                    outgoing: bool = False):
    """A feasible (a, v) boundary pair within the limits.

    Outgoing (final) states must satisfy the time-reversed excursion bound.
    """
    while True:
        a = rng.uniform(-limits.amax, limits.amax)
        v = rng.uniform(-limits.vmax, limits.vmax)
        a_eff = -a if outgoing else a
        if abs(v + a_eff * abs(a_eff) / (2.0 * limits.jmax)) <= limits.vmax:
            return a, v
