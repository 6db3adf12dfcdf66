import itertools
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from utils.errors import SchemaError
from world.schema import UNIT, EntityId
from world.state import WorldState
from queries.grammar import And, Anyway, Excl, Incl, Query, QueryVector

log = logging.getLogger(__name__)

_MISSING = object()  # point lookup found nothing; distinct from Anyway's None


@dataclass(frozen=True, slots=True)
class EntityMatch:
	entities: Tuple[EntityId, ...]
	results: Tuple[object, ...]

	def __post_init__(self):
		if len(self.entities) != len(self.results):
			raise SchemaError(f"Match has {len(self.entities)} entities but {len(self.results)} results")

	@property
	def entity(self) -> EntityId: return self.entities[0]
	@property
	def result(self) -> object: return self.results[0]

	def __str__(self): return "⟨" + ", ".join(map(str, self.entities)) + "⟩"


def _eval(c: WorldState, q: Query, live: FrozenSet[EntityId]) -> Dict[EntityId, object]:
	if isinstance(q, Incl): return dict(c.store(q.label))
	if isinstance(q, Excl):
		store = c.store(q.label)
		return {e: UNIT for e in live if e not in store}
	if isinstance(q, Anyway):
		store = c.store(q.label)
		return {e: store.get(e) for e in live}
	if isinstance(q, And):
		left = _eval(c, q.left, live)
		if not left: return {}
		right = _eval(c, q.right, live)
		return {e: (w, right[e]) for e, w in left.items() if e in right}
	raise SchemaError(f"Not a query: {q!r}")

def eval_query(c: WorldState, q: Query) -> Dict[EntityId, object]:
	"""Entities matching `q` in ascending id order, mapped to their component results."""
	c.schema.require(q.labels())
	return dict(sorted(_eval(c, q, c.live_entities()).items()))

def eval_query_vector(c: WorldState, qv: QueryVector) -> List[EntityMatch]:
	"""Cartesian product of per-query results, lexicographic on entity vectors."""
	c.schema.require(qv.labels())
	live = c.live_entities()
	per = [sorted(_eval(c, q, live).items()) for q in qv]
	return [EntityMatch(tuple(e for e, _ in combo), tuple(w for _, w in combo))
		for combo in itertools.product(*per)]


def _point(c: WorldState, q: Query, e: EntityId, live: FrozenSet[EntityId]) -> object:
	if isinstance(q, Incl):
		v = c.get(q.label, e)
		return _MISSING if v is None else v
	if isinstance(q, Excl):
		return UNIT if e in live and c.get(q.label, e) is None else _MISSING
	if isinstance(q, Anyway):
		return c.get(q.label, e) if e in live else _MISSING
	if isinstance(q, And):
		left = _point(c, q.left, e, live)
		if left is _MISSING: return _MISSING
		right = _point(c, q.right, e, live)
		return _MISSING if right is _MISSING else (left, right)
	raise SchemaError(f"Not a query: {q!r}")

def lookup_match(c: WorldState, qv: QueryVector, entities: Sequence[EntityId]) -> Optional[Tuple[object, ...]]:
	"""Results for one entity vector, or None when it is not in ⟦qv⟧ at `c`.

	Same answer as searching eval_query_vector, without building the product.
	"""
	if len(entities) != qv.dim: return None
	live = c.live_entities()
	out = []
	for q, e in zip(qv, entities):
		w = _point(c, q, e, live)
		if w is _MISSING: return None
		out.append(w)
	return tuple(out)
