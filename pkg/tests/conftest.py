import os

import pytest
from hypothesis import HealthCheck, settings

from group_density.algebra import GroupMorphism, cyclic_group, symmetric_group
from group_density.services.fixture_service import FixtureService
from group_density.shifts import PeriodicShift, SFTShift, SubstitutionShift

settings.register_profile("ci", max_examples=50, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("dev", max_examples=20, deadline=None)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "dev"))


@pytest.fixture
def fibonacci():
    return SubstitutionShift({"a": "ab", "b": "a"}, name="fibonacci")


@pytest.fixture
def thue_morse():
    return SubstitutionShift({"a": "ab", "b": "ba"}, name="thue-morse")


@pytest.fixture
def golden_mean():
    return SFTShift.from_forbidden("ab", 1, ["bb"], name="golden-mean")


@pytest.fixture
def periodic_abc():
    return PeriodicShift("abc")


@pytest.fixture
def z2():
    return cyclic_group(2)


@pytest.fixture
def s3():
    return symmetric_group(3)


@pytest.fixture
def parity_of_a(z2):
    """a ↦ 1, b ↦ 0 in Z/2Z."""
    return GroupMorphism.from_mapping(z2, {"a": 1, "b": 0}, "ab")


@pytest.fixture
def fixtures():
    return FixtureService()


@pytest.fixture
def load_fixture(fixtures):
    return fixtures.load
