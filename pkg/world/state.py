import logging
from types import MappingProxyType
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple

from utils.constants import MAX_ENTITY
from utils.errors import CapacityError, SchemaError
from world.fresh import FreshSource
from world.mutation import Attach, Compose, Detach, Fresh, Mutation, Nil
from world.schema import ComponentValue, EntityId, Schema

log = logging.getLogger(__name__)


class WorldState:
	"""Immutable world: one store per schema label plus the next fresh id.

	Derived states share untouched stores with their parent.
	"""

	__slots__ = ("_schema", "_stores", "_next_fresh", "_live")

	def __init__(self, schema: Schema, stores: Mapping[str, Mapping[EntityId, ComponentValue]], next_fresh: EntityId):
		self._schema = schema
		self._stores: Dict[str, Mapping[EntityId, ComponentValue]] = {label: stores.get(label, {}) for label in schema.labels}
		self._next_fresh = next_fresh
		self._live: Optional[FrozenSet[EntityId]] = None

	@property
	def schema(self) -> Schema:
		return self._schema

	@property
	def next_fresh(self) -> EntityId:
		return self._next_fresh

	@property
	def stores(self) -> Mapping[str, Mapping[EntityId, ComponentValue]]:
		return MappingProxyType({label: MappingProxyType(store) for label, store in self._stores.items()})

	def store(self, label: str) -> Mapping[EntityId, ComponentValue]:
		self._schema.kind_of(label)
		return MappingProxyType(self._stores[label])

	def get(self, label: str, entity: EntityId) -> Optional[ComponentValue]:
		self._schema.kind_of(label)
		return self._stores[label].get(entity)

	def live_entities(self) -> FrozenSet[EntityId]:
		if self._live is None:
			live = set()
			for store in self._stores.values():
				live.update(store)
			self._live = frozenset(live)
		return self._live

	def __eq__(self, other: object) -> bool:
		if not isinstance(other, WorldState):
			return NotImplemented
		return (self._schema == other._schema and self._next_fresh == other._next_fresh
				and all(dict(self._stores[l]) == dict(other._stores[l]) for l in self._schema.labels))

	__hash__ = None  # type: ignore[assignment]

	def __repr__(self) -> str:
		from world.render import render_state
		return f"WorldState({render_state(self)})"


class _Working:
	"""Copy-on-write scratch space used while a mutation is applied."""

	def __init__(self, c: WorldState):
		self.schema = c.schema
		self.stores: Dict[str, Mapping[EntityId, ComponentValue]] = dict(c._stores)
		self.copied: set = set()
		self.next_fresh = c.next_fresh.value

	def _own(self, label: str) -> dict:
		if label not in self.copied:
			self.stores[label] = dict(self.stores[label])
			self.copied.add(label)
		return self.stores[label]  # type: ignore[return-value]

	def _bump(self, e: EntityId) -> None:
		if e.value >= self.next_fresh:
			if e.value >= MAX_ENTITY:
				raise CapacityError(f"No fresh id left after {e}")
			self.next_fresh = e.value + 1

	def attach(self, m: Attach) -> None:
		self.schema.check_value(m.label, m.value)
		self._own(m.label)[m.entity] = m.value
		self._bump(m.entity)
		if isinstance(m.value.payload, EntityId):
			self._bump(m.value.payload)

	def detach(self, m: Detach) -> None:
		self.schema.kind_of(m.label)
		if m.entity in self.stores[m.label]:
			del self._own(m.label)[m.entity]

	def fresh(self, source: Optional[FreshSource]) -> EntityId:
		if self.next_fresh > MAX_ENTITY:
			raise CapacityError("Entity counter exhausted")
		e = source.take(EntityId(self.next_fresh)) if source is not None else EntityId(self.next_fresh)
		self._bump(e)
		return e

	def freeze(self) -> WorldState:
		return WorldState(self.schema, self.stores, EntityId(self.next_fresh))


def empty_state(schema: Schema) -> WorldState:
	"""All stores empty, next_fresh = e0."""
	return WorldState(schema, {}, EntityId(0))


def new_state(schema: Schema, m: Mutation) -> WorldState:
	"""Apply `m` to the empty state of `schema`; how start states are built."""
	return apply_mutation(empty_state(schema), m)


def live_entities(c: WorldState) -> FrozenSet[EntityId]:
	return c.live_entities()


def apply_mutation(c: WorldState, m: Mutation, *, fresh: Optional[FreshSource] = None) -> WorldState:
	"""Interpret `m` against `c`. Iterative, so long Compose chains do not recurse.

	Args:
		c: Input state, left untouched.
		m: Mutation to apply.
		fresh: Where Fresh nodes take their ids; defaults to the state's counter.

	Returns:
		The resulting state.

	Raises:
		SchemaError: Unknown label or a value of the wrong kind.
		CapacityError: The entity counter ran out.
	"""
	w = _Working(c)
	stack: List[Mutation] = [m]
	while stack:
		cur = stack.pop()
		if isinstance(cur, Attach):
			w.attach(cur)
		elif isinstance(cur, Detach):
			w.detach(cur)
		elif isinstance(cur, Compose):
			stack.append(cur.second)
			stack.append(cur.first)
		elif isinstance(cur, Fresh):
			body = cur.body(w.fresh(fresh))
			if not isinstance(body, Mutation):
				raise SchemaError(f"Fresh body returned {body!r}, not a mutation")
			stack.append(body)
		elif isinstance(cur, Nil):
			continue
		else:
			raise SchemaError(f"Not a mutation: {cur!r}")
	return w.freeze()


def fresh_entity(c: WorldState) -> Tuple[EntityId, WorldState]:
	"""Allocate c.next_fresh and return it with the advanced state."""
	w = _Working(c)
	e = w.fresh(None)
	return e, w.freeze()


def _appearing_ids(c: WorldState) -> set:
	ids = set()
	for store in c._stores.values():
		for e, v in store.items():
			ids.add(e)
			if isinstance(v.payload, EntityId):
				ids.add(v.payload)
	return ids


def _signatures(c: WorldState, ids: Iterable[EntityId], base: int) -> Dict[EntityId, tuple]:
	# Content fingerprint with fresh references masked, refined once through them
	def cell(v: Optional[ComponentValue], deep: Dict[EntityId, tuple]) -> str:
		if v is None:
			return "-"
		p = v.payload
		if isinstance(p, EntityId):
			if p.value < base:
				return f"o{p.value}"
			return f"f{deep.get(p, ())}"
		return repr(p)

	ids = list(ids)
	shallow: Dict[EntityId, tuple] = {}
	sig: Dict[EntityId, tuple] = {e: tuple(cell(c._stores[l].get(e), shallow) for l in c.schema.labels) for e in ids}
	return {e: tuple(cell(c._stores[l].get(e), sig) for l in c.schema.labels) for e in ids}


def canonicalize(c: WorldState, *, fresh_base: Optional[EntityId | int] = None) -> WorldState:
	"""Rename every appearing entity id to e0..e(n-1) and set next_fresh = e<n>.

	Without `fresh_base` ids keep their numeric order. With it, ids below the
	base keep their order and ids at or above it follow, ordered by content.
	"""
	ids = _appearing_ids(c)
	if fresh_base is None:
		order = sorted(ids)
	else:
		base = fresh_base.value if isinstance(fresh_base, EntityId) else int(fresh_base)
		old = sorted(e for e in ids if e.value < base)
		new = [e for e in ids if e.value >= base]
		sig = _signatures(c, new, base)
		order = old + sorted(new, key=lambda e: (sig[e], e))
	rename = {e: EntityId(i) for i, e in enumerate(order)}

	def mv(v: ComponentValue) -> ComponentValue:
		return ComponentValue(v.label, rename[v.payload]) if isinstance(v.payload, EntityId) else v

	stores = {label: {rename[e]: mv(v) for e, v in sorted(store.items(), key=lambda kv: rename[kv[0]])}
		for label, store in c._stores.items()}
	return WorldState(c.schema, stores, EntityId(len(order)))


def states_equal_upto_fresh(c: WorldState, c2: WorldState, *, fresh_base: Optional[EntityId | int] = None) -> bool:
	"""True iff the canonical forms are equal."""
	if c.schema != c2.schema:
		raise SchemaError("States have different schemas")
	return canonicalize(c, fresh_base=fresh_base) == canonicalize(c2, fresh_base=fresh_base)

