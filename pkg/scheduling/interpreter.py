import logging

from scheduling.schedule import Conc, Par, Schedule, Seq, SeqComp
from systems.production import concurrent_production, sequential_production
from world.mutation import Compose, Mutation
from world.state import WorldState, apply_mutation

log = logging.getLogger(__name__)


def interpret_schedule(c: WorldState, z: Schedule) -> Mutation:
	"""Mutation that `z` denotes at `c`. Par reads `c` on both sides; SeqComp's right side reads the left's result."""
	if isinstance(z, Conc): return concurrent_production(c, z.system)
	if isinstance(z, Seq): return sequential_production(c, z.system)
	if isinstance(z, Par): return Compose(interpret_schedule(c, z.left), interpret_schedule(c, z.right))
	if isinstance(z, SeqComp):
		m = interpret_schedule(c, z.left)
		return Compose(m, interpret_schedule(apply_mutation(c, m), z.right))
	raise TypeError(f"Not a schedule: {z!r}")


def apply_schedule(c: WorldState, z: Schedule) -> WorldState:
	return apply_mutation(c, interpret_schedule(c, z))
