import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Iterator, List, Sequence, Tuple

import networkx as nx

from queries.engine import EntityMatch, eval_query_vector
from scheduling.interpreter import apply_schedule
from scheduling.schedule import Conc, Par, Schedule, Seq, SeqComp
from systems.production import roll
from systems.system import System
from utils.constants import ROOT_NODE
from world.mutation import Mutation
from world.schema import EntityId
from world.state import WorldState

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Invocation:
	"""One system-function call with the match captured when the order was built."""
	system: System
	match: EntityMatch
	tag: int
	node: str = ROOT_NODE
	sentinel_base: EntityId = EntityId(0)  # next_fresh of the state the match was taken from

	def mutation(self) -> Mutation: return self.system(self.match)

	@property
	def name(self) -> str: return f"{self.system.name}#{self.tag}"

	def under(self, path: str) -> bool: return self.node == path or self.node.startswith(path + ".")

	def __str__(self): return self.name


@dataclass(frozen=True)
class InvocationPO:
	"""Invocations of a schedule at a state, with their happens-before order.

	`order` is reflexive and transitively closed; `graph` keeps only the
	generating edges and is what enumeration walks.
	"""
	elements: Tuple[Invocation, ...]
	order: FrozenSet[Tuple[int, int]]
	graph: nx.DiGraph = field(compare=False, repr=False)

	def __len__(self): return len(self.elements)
	def __iter__(self) -> Iterator[Invocation]: return iter(self.elements)

	@property
	def by_tag(self) -> Dict[int, Invocation]: return {i.tag: i for i in self.elements}

	def precedes(self, a: int, b: int) -> bool: return (a, b) in self.order

	def respects(self, lin: Sequence[Invocation]) -> bool:
		"""True iff `lin` is a permutation of the elements that keeps every ordered pair."""
		pos = {inv.tag: i for i, inv in enumerate(lin)}
		if len(pos) != len(self.elements) or set(pos) != {i.tag for i in self.elements}: return False
		return all(pos[a] <= pos[b] for a, b in self.order)

	def under(self, path: str) -> List[Invocation]: return [i for i in self.elements if i.under(path)]


class _PoBuilder:
	def __init__(self):
		self.elements: List[Invocation] = []
		self.edges: List[Tuple[int, int]] = []

	def _add(self, s: System, matches: Iterable[EntityMatch], path: str, c: WorldState) -> List[int]:
		tags = []
		for m in matches:
			tag = len(self.elements)
			self.elements.append(Invocation(s, m, tag, path, c.next_fresh))
			tags.append(tag)
		return tags

	def build(self, c: WorldState, z: Schedule, path: str) -> List[int]:
		if isinstance(z, Conc):
			return self._add(z.system, eval_query_vector(c, z.system.query), path, c)
		if isinstance(z, Seq):
			s = z.system
			tags = self._add(s, roll(s, c, eval_query_vector(c, s.query)), path, c)
			self.edges.extend(zip(tags, tags[1:]))
			return tags
		if isinstance(z, Par):
			return self.build(c, z.left, f"{path}.0") + self.build(c, z.right, f"{path}.1")
		if isinstance(z, SeqComp):
			left = self.build(c, z.left, f"{path}.0")
			right = self.build(apply_schedule(c, z.left), z.right, f"{path}.1")
			self.edges.extend((a, b) for a in left for b in right)
			return left + right
		raise TypeError(f"Not a schedule: {z!r}")


def invocation_po(c: WorldState, z: Schedule) -> InvocationPO:
	"""Build the invocation partial order of `z` at `c`.

	Conc gives an antichain over its matches, Seq a chain over the rolled
	matches, Par a disjoint union, and SeqComp a disjoint union with every
	left invocation before every right one (the right side built at z(c)).
	"""
	b = _PoBuilder()
	b.build(c, z, ROOT_NODE)
	graph = nx.DiGraph()
	graph.add_nodes_from(i.tag for i in b.elements)
	graph.add_edges_from(b.edges)
	closure = nx.transitive_closure_dag(graph)
	order = frozenset(closure.edges()) | frozenset((t, t) for t in graph.nodes)
	log.debug(f"PO: {len(b.elements)} invocations, {len(order) - len(b.elements)} strict pairs")
	return InvocationPO(tuple(b.elements), order, graph)
