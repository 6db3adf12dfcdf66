import logging
from typing import Dict, Iterable, Set

from queries.engine import eval_query_vector
from scheduling.interpreter import apply_schedule
from scheduling.invocations import Invocation
from scheduling.schedule import Conc, Par, Schedule, Seq, SeqComp
from systems.production import roll
from world.influence import Cell, Influence, mutation_influence
from world.state import WorldState

log = logging.getLogger(__name__)


def invocation_influence(inv: Invocation) -> Influence:
	return mutation_influence(inv.mutation(), sentinel_base=inv.sentinel_base)


def influences(invs: Iterable[Invocation]) -> Dict[int, Influence]:
	"""Influence of each invocation keyed by tag."""
	return {inv.tag: invocation_influence(inv) for inv in invs}


def schedule_influence(c: WorldState, z: Schedule) -> Influence:
	"""Cells the schedule may write at `c`: Conc over its matches, Seq over the rolled ones, SeqComp's right side at z(c)."""
	out: Set[Cell] = set()
	if isinstance(z, (Conc, Seq)):
		s = z.system
		matches = eval_query_vector(c, s.query)
		if isinstance(z, Seq): matches = roll(s, c, matches)
		for m in matches: out |= mutation_influence(s(m), sentinel_base=c.next_fresh)
	elif isinstance(z, Par):
		out = set(schedule_influence(c, z.left)) | schedule_influence(c, z.right)
	elif isinstance(z, SeqComp):
		out = set(schedule_influence(c, z.left)) | schedule_influence(apply_schedule(c, z.left), z.right)
	else:
		raise TypeError(f"Not a schedule: {z!r}")
	return frozenset(out)
