import math

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from nsg import build

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

EXAMPLE_3 = "30,42,51;290"
EXAMPLE_45 = ",".join(str(1000 + 25 * k) for k in range(40)) + ",1507,1899,13765,13790,13815"
EXAMPLE_46 = "50,55,60,65,70,73,77,81,86,91,96,194,199"


@st.composite
def generator_specs(draw, max_m=25, allow_threshold=True):
    """(generators, threshold) with gcd 1 when there is no threshold."""
    m = draw(st.integers(2, max_m))
    extra = draw(st.lists(st.integers(m + 1, 4 * m), min_size=1, max_size=5))
    gens = [m] + extra
    threshold = None
    if allow_threshold and draw(st.booleans()):
        threshold = draw(st.integers(m + 1, 8 * m))
    elif math.gcd(*gens) != 1:
        gens.append(m + 1)
    return gens, threshold


@pytest.fixture(scope="session")
def ex3():
    return build(EXAMPLE_3)


@pytest.fixture(scope="session")
def ex46():
    return build(EXAMPLE_46)


@pytest.fixture(scope="session")
def ex45():
    return build(EXAMPLE_45)
