from queries.engine import EntityMatch
from queries.grammar import Incl
from scenarios.base import Scenario
from scheduling.schedule import Conc
from systems.system import system
from world.mutation import NIL, Mutation, attach, compose, spawn
from world.schema import ComponentKind, Schema
from world.state import new_state

INT = "Int"
THRESHOLD = 4

COUNTER_SCHEMA = Schema.of((INT, ComponentKind.INTEGER))


@system("increment", Incl(INT))
def increment(m: EntityMatch) -> Mutation:
	n = m.result.payload
	return attach(INT, m.entity, n + 1) if n < THRESHOLD else NIL


@system("decrement", Incl(INT))
def decrement(m: EntityMatch) -> Mutation:
	n = m.result.payload
	return NIL if n < THRESHOLD else attach(INT, m.entity, n - 1)


DISJOINT_EXPECTED = (
	"Int↦{e0 ↦ 3, e1 ↦ 8} :+ Metadata {nextFresh = e2}",
	"Int↦{e0 ↦ 4, e1 ↦ 7} :+ Metadata {nextFresh = e2}",
	"Int↦{e0 ↦ 3, e1 ↦ 6} :+ Metadata {nextFresh = e2} END",
)


def disjoint_entities() -> Scenario:
	"""Both systems write Int, but never on the same entity in the same frame."""
	start = new_state(COUNTER_SCHEMA, compose(spawn({INT: 3}), spawn({INT: 8})))
	return Scenario("disjoint-entities", start, Conc(increment) | Conc(decrement),
		{"increment": frozenset({INT}), "decrement": frozenset({INT})}, frames=2,
		summary="Counters pulled toward the threshold from both sides.", expected=DISJOINT_EXPECTED)
