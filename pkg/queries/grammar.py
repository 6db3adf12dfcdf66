import logging
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Tuple, Union

from utils.errors import SchemaError
from world.schema import UNIT, ComponentValue, Schema

log = logging.getLogger(__name__)


class Query:
	"""Node of the query grammar. `a & b` builds And(a, b)."""
	__slots__ = ()
	def __and__(self, other: "Query") -> "And":
		if not isinstance(other, Query): return NotImplemented
		return And(self, other)
	def labels(self) -> Iterator[str]: raise NotImplementedError


@dataclass(frozen=True, slots=True)
class Incl(Query):
	label: str
	def labels(self): yield self.label
	def __str__(self): return f"Incl {self.label}"


@dataclass(frozen=True, slots=True)
class Excl(Query):
	label: str
	def labels(self): yield self.label
	def __str__(self): return f"Excl {self.label}"


@dataclass(frozen=True, slots=True)
class Anyway(Query):
	label: str
	def labels(self): yield self.label
	def __str__(self): return f"Anyway {self.label}"


@dataclass(frozen=True, slots=True)
class And(Query):
	left: Query
	right: Query
	def labels(self):
		yield from self.left.labels(); yield from self.right.labels()
	def __str__(self): return f"({self.left} ∧ {self.right})"


@dataclass(frozen=True)
class QueryVector:
	queries: Tuple[Query, ...]

	def __post_init__(self):
		qs = tuple(self.queries)
		if not qs: raise SchemaError("Query vector needs at least one query")
		for q in qs:
			if not isinstance(q, Query): raise SchemaError(f"Not a query: {q!r}")
		object.__setattr__(self, "queries", qs)

	@classmethod
	def of(cls, *queries: Query) -> "QueryVector": return cls(queries)

	@property
	def dim(self) -> int: return len(self.queries)

	def labels(self) -> Iterator[str]:
		for q in self.queries: yield from q.labels()

	def __iter__(self): return iter(self.queries)
	def __len__(self): return len(self.queries)
	def __str__(self): return "⟨" + ", ".join(map(str, self.queries)) + "⟩"


# Result shapes

@dataclass(frozen=True, slots=True)
class ComponentSlot:
	label: str

@dataclass(frozen=True, slots=True)
class UnitSlot: pass

@dataclass(frozen=True, slots=True)
class OptionalSlot:
	label: str

@dataclass(frozen=True, slots=True)
class PairSlot:
	left: "Shape"
	right: "Shape"

Shape = Union[ComponentSlot, UnitSlot, OptionalSlot, PairSlot]


def _shape(q: Query) -> Shape:
	if isinstance(q, Incl): return ComponentSlot(q.label)
	if isinstance(q, Excl): return UnitSlot()
	if isinstance(q, Anyway): return OptionalSlot(q.label)
	if isinstance(q, And): return PairSlot(_shape(q.left), _shape(q.right))
	raise SchemaError(f"Not a query: {q!r}")

def result_shape(q: Query | QueryVector, schema: Optional[Schema] = None) -> Shape | Tuple[Shape, ...]:
	"""Shape of the results `q` produces; labels are checked when a schema is given."""
	if schema is not None: schema.require(q.labels())
	if isinstance(q, QueryVector): return tuple(_shape(x) for x in q)
	return _shape(q)

def conforms(result: object, shape: Shape) -> bool:
	"""Structural check of a component result against a shape."""
	if isinstance(shape, ComponentSlot):
		return isinstance(result, ComponentValue) and result.label == shape.label
	if isinstance(shape, UnitSlot): return result == UNIT
	if isinstance(shape, OptionalSlot):
		return result is None or (isinstance(result, ComponentValue) and result.label == shape.label)
	if isinstance(shape, PairSlot):
		return (isinstance(result, tuple) and len(result) == 2
			and conforms(result[0], shape.left) and conforms(result[1], shape.right))
	return False

def conforms_all(results: Iterable[object], shapes: Tuple[Shape, ...]) -> bool:
	results = tuple(results)
	return len(results) == len(shapes) and all(conforms(r, s) for r, s in zip(results, shapes))
