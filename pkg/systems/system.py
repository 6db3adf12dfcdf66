import logging
from dataclasses import dataclass, field
from typing import Callable, Tuple

from queries.engine import EntityMatch
from queries.grammar import Query, QueryVector, Shape, result_shape
from world.mutation import Mutation

log = logging.getLogger(__name__)

SystemFunc = Callable[[EntityMatch], Mutation]


@dataclass(frozen=True)
class System:
	"""Named pair of a query vector and a pure match -> mutation function."""
	name: str
	query: QueryVector
	func: SystemFunc = field(compare=False)

	def __post_init__(self):
		if not isinstance(self.query, QueryVector):
			object.__setattr__(self, "query", QueryVector(tuple(self.query)))

	@property
	def shape(self) -> Tuple[Shape, ...]: return result_shape(self.query)  # type: ignore[return-value]

	def __call__(self, match: EntityMatch) -> Mutation:
		m = self.func(match)
		if not isinstance(m, Mutation): raise TypeError(f"System '{self.name}' returned {m!r}, not a mutation")
		return m

	def __str__(self): return self.name


def system(name: str, *queries: Query) -> Callable[[SystemFunc], System]:
	"""Decorator turning a match function into a System over `queries`."""
	def wrap(fn: SystemFunc) -> System:
		return System(name, QueryVector(queries), fn)
	return wrap
