from dataclasses import dataclass
from typing import Callable, List, Mapping

from queries.engine import EntityMatch
from queries.grammar import Anyway, Excl, Incl, Query, QueryVector
from scenarios.base import Scenario
from scenarios.physics import PHYSICS_SCHEMA, POS, VEL
from scheduling.schedule import Conc
from systems.system import System
from world.mutation import Detach, Fresh, Mutation, attach, compose, spawn
from world.state import new_state


@dataclass(frozen=True)
class Category:
	"""One row of the mutation classification: ownership crossed with the kind of edit."""
	name: str
	query: Query
	func: Callable[[EntityMatch], Mutation]
	start: tuple
	expected: tuple

	def system(self) -> System:
		return System(self.name, QueryVector.of(self.query), self.func)


def _start(*rows: Mapping[str, int]):
	return new_state(PHYSICS_SCHEMA, compose(*(spawn(r) for r in rows)))


MIXED = ({POS: 1}, {POS: 5, VEL: 2}, {VEL: 3})
MIXED_LINE = "Pos↦{e0 ↦ Pos 1, e1 ↦ Pos 5} :+ Vel↦{e1 ↦ Vel 2, e2 ↦ Vel 3} :+ Metadata {nextFresh = e3}"

CATEGORIES: List[Category] = [
	Category("owned-update", Incl(POS), lambda m: attach(POS, m.entity, 0), MIXED, (
		MIXED_LINE,
		"Pos↦{e0 ↦ Pos 0, e1 ↦ Pos 0} :+ Vel↦{e1 ↦ Vel 2, e2 ↦ Vel 3} :+ Metadata {nextFresh = e3} END")),
	Category("owned-insert", Excl(POS), lambda m: attach(POS, m.entity, 0), MIXED, (
		MIXED_LINE,
		"Pos↦{e0 ↦ Pos 1, e1 ↦ Pos 5, e2 ↦ Pos 0} :+ Vel↦{e1 ↦ Vel 2, e2 ↦ Vel 3} :+ Metadata {nextFresh = e3} END")),
	Category("owned-initialize", Anyway(POS), lambda m: Fresh(lambda e: attach(POS, e, 0)), MIXED, (
		MIXED_LINE,
		"Pos↦{e0 ↦ Pos 1, e1 ↦ Pos 5, e3 ↦ Pos 0, e4 ↦ Pos 0, e5 ↦ Pos 0} :+ Vel↦{e1 ↦ Vel 2, e2 ↦ Vel 3} :+ Metadata {nextFresh = e6} END")),
	Category("owned-delete", Incl(POS), lambda m: Detach(POS, m.entity), MIXED, (
		MIXED_LINE,
		"Pos↦{} :+ Vel↦{e1 ↦ Vel 2, e2 ↦ Vel 3} :+ Metadata {nextFresh = e3} END")),
	Category("deferred-update", Anyway(POS), lambda m: attach(VEL, m.entity, 1), ({POS: 1, VEL: 2}, {VEL: 3}), (
		"Pos↦{e0 ↦ Pos 1} :+ Vel↦{e0 ↦ Vel 2, e1 ↦ Vel 3} :+ Metadata {nextFresh = e2}",
		"Pos↦{e0 ↦ Pos 1} :+ Vel↦{e0 ↦ Vel 1, e1 ↦ Vel 1} :+ Metadata {nextFresh = e2} END")),
	Category("deferred-insert", Anyway(POS), lambda m: attach(VEL, m.entity, 1), ({POS: 1}, {POS: 4}), (
		"Pos↦{e0 ↦ Pos 1, e1 ↦ Pos 4} :+ Vel↦{} :+ Metadata {nextFresh = e2}",
		"Pos↦{e0 ↦ Pos 1, e1 ↦ Pos 4} :+ Vel↦{e0 ↦ Vel 1, e1 ↦ Vel 1} :+ Metadata {nextFresh = e2} END")),
	Category("deferred-initialize", Anyway(POS), lambda m: Fresh(lambda e: attach(VEL, e, 1)), ({POS: 1}, {POS: 4, VEL: 2}), (
		"Pos↦{e0 ↦ Pos 1, e1 ↦ Pos 4} :+ Vel↦{e1 ↦ Vel 2} :+ Metadata {nextFresh = e2}",
		"Pos↦{e0 ↦ Pos 1, e1 ↦ Pos 4} :+ Vel↦{e1 ↦ Vel 2, e2 ↦ Vel 1, e3 ↦ Vel 1} :+ Metadata {nextFresh = e4} END")),
	Category("deferred-delete", Anyway(POS), lambda m: Detach(VEL, m.entity), ({POS: 1, VEL: 2}, {VEL: 3}), (
		"Pos↦{e0 ↦ Pos 1} :+ Vel↦{e0 ↦ Vel 2, e1 ↦ Vel 3} :+ Metadata {nextFresh = e2}",
		"Pos↦{e0 ↦ Pos 1} :+ Vel↦{} :+ Metadata {nextFresh = e2} END")),
]

CATEGORY_LABELS = {"owned": POS, "deferred": VEL}


def category_scenario(cat: Category) -> Scenario:
	s = cat.system()
	written = CATEGORY_LABELS[cat.name.split("-")[0]]
	return Scenario(cat.name, _start(*cat.start), Conc(s), {s.name: frozenset({written})}, frames=1,
		summary=f"{s.query} under Conc", expected=cat.expected)


def category_scenarios() -> List[Scenario]:
	return [category_scenario(c) for c in CATEGORIES]
