import pytest
from hypothesis import HealthCheck, settings

from lseries_vanish import PeriodicFunction

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@pytest.fixture
def kernel4():
    return PeriodicFunction.from_values([2, -6, 2, 2])


@pytest.fixture
def log2_half():
    return PeriodicFunction.from_values([1, -2, 1, 0])
