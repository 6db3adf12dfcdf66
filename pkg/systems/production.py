import logging
from typing import Callable, List, Optional, Sequence

from utils.errors import ShapeError
from queries.engine import EntityMatch, eval_query_vector, lookup_match
from queries.grammar import conforms_all
from systems.system import System
from world.mutation import Mutation, compose
from world.state import WorldState, apply_mutation

log = logging.getLogger(__name__)

RollObserver = Callable[[WorldState, EntityMatch], None]


def apply_system(s: System, matches: Sequence[EntityMatch]) -> Mutation:
	"""Compose s's mutations for `matches` left to right; Nil when empty.

	Raises:
		ShapeError: A match does not conform to s's query shape.
	"""
	shapes = s.shape
	for m in matches:
		if len(m.entities) != len(shapes) or not conforms_all(m.results, shapes):
			raise ShapeError(f"Match {m} does not fit system '{s.name}' {s.query}")
	return compose(*(s(m) for m in matches))


def roll(s: System, c: WorldState, matches: Sequence[EntityMatch], observe: Optional[RollObserver] = None) -> List[EntityMatch]:
	"""Re-query each match at the state left by its predecessors.

	Matches whose entity vector no longer satisfies the query are dropped and
	never revisited. `observe` sees each retained match with the state it was
	refreshed at.
	"""
	out: List[EntityMatch] = []
	cur = c
	for m in matches:
		w = lookup_match(cur, s.query, m.entities)
		if w is None:
			log.debug(f"Roll '{s.name}': drop {m}")
			continue
		fresh_m = EntityMatch(m.entities, w)
		if observe is not None: observe(cur, fresh_m)
		out.append(fresh_m)
		cur = apply_mutation(cur, s(fresh_m))
	return out


def concurrent_production(c: WorldState, s: System) -> Mutation:
	"""Observe `c` once and compose s over every match."""
	return apply_system(s, eval_query_vector(c, s.query))


def sequential_production(c: WorldState, s: System) -> Mutation:
	"""Like concurrent_production, but each match sees the writes of the ones before it."""
	return apply_system(s, roll(s, c, eval_query_vector(c, s.query)))
