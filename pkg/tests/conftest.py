import pytest
from hypothesis import settings as hsettings

from scenarios.physics import PHYSICS_SCHEMA, collide, inertia, toy_start
from scheduling.interpreter import apply_schedule
from scheduling.schedule import Conc, Seq


@pytest.fixture
def schema():
	return PHYSICS_SCHEMA


@pytest.fixture
def start():
	"""Two movers (e0, e2) heading for a resting object (e1)."""
	return toy_start()


@pytest.fixture
def converged(start):
	"""Start after one inertia step: all three objects at position 7."""
	return apply_schedule(start, Conc(inertia))


@pytest.fixture
def toy_schedule():
	return Conc(inertia) >> Seq(collide)


@pytest.fixture
def lost_write_schedule():
	return Conc(inertia) >> Conc(collide)


# brute force and thread pools make single examples slow; no per-example deadline
hsettings.register_profile("coreecs", deadline=None)
hsettings.load_profile("coreecs")
