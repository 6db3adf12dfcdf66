from queries.engine import EntityMatch
from queries.grammar import Excl, Incl
from scenarios.base import Scenario
from scheduling.schedule import Conc, Seq
from systems.system import system
from utils.helpers import quot
from world.mutation import NIL, Detach, Fresh, Mutation, attach, compose, spawn
from world.schema import ComponentKind, Schema
from world.state import new_state

POS, VEL, ROT, SPIN = "Pos", "Vel", "Rot", "Spin"

PHYSICS_SCHEMA = Schema.of((POS, ComponentKind.INTEGER), (VEL, ComponentKind.INTEGER))
SHAPES_SCHEMA = Schema.of((POS, ComponentKind.INTEGER), (VEL, ComponentKind.INTEGER),
	(ROT, ComponentKind.INTEGER), (SPIN, ComponentKind.INTEGER))


@system("inertia", Incl(POS) & Incl(VEL))
def inertia(m: EntityMatch) -> Mutation:
	p, v = m.result
	return attach(POS, m.entity, p.payload + v.payload)


@system("collide", Incl(POS) & Incl(VEL), Incl(POS) & Excl(VEL))
def collide(m: EntityMatch) -> Mutation:
	"""A mover meeting a resting object stops, hands it half its velocity and splits off a fragment."""
	mover, rest = m.entities
	(p, v), (q, _) = m.results
	if p.payload != q.payload: return NIL
	pj, vj = p.payload, v.payload
	return compose(
		Detach(POS, mover),
		Detach(VEL, mover),
		attach(VEL, rest, quot(vj, 2)),
		Fresh(lambda e: compose(attach(POS, e, pj), attach(VEL, e, quot(vj, -2)))),
	)


@system("rotate", Incl(ROT) & Incl(SPIN))
def rotate(m: EntityMatch) -> Mutation:
	r, s = m.result
	return attach(ROT, m.entity, r.payload + s.payload)


@system("render", Incl(POS))
def render(m: EntityMatch) -> Mutation:
	return NIL # read-only


DECLARED = {"inertia": frozenset({POS}), "collide": frozenset({POS, VEL}), "rotate": frozenset({ROT}), "render": frozenset()}

TOY_EXPECTED = (
	"Pos↦{e0 ↦ Pos 1, e1 ↦ Pos 7, e2 ↦ Pos 9} :+ Vel↦{e0 ↦ Vel 6, e2 ↦ Vel (-2)} :+ Metadata {nextFresh = e3}",
	"Pos↦{e1 ↦ Pos 7, e2 ↦ Pos 7, e3 ↦ Pos 7} :+ Vel↦{e1 ↦ Vel 3, e2 ↦ Vel (-2), e3 ↦ Vel (-3)} :+ Metadata {nextFresh = e4}",
	"Pos↦{e1 ↦ Pos 10, e2 ↦ Pos 5, e3 ↦ Pos 4} :+ Vel↦{e1 ↦ Vel 3, e2 ↦ Vel (-2), e3 ↦ Vel (-3)} :+ Metadata {nextFresh = e4} END",
)


def toy_start():
	return new_state(PHYSICS_SCHEMA, compose(spawn({POS: 1, VEL: 6}), spawn({POS: 7}), spawn({POS: 9, VEL: -2})))


def toy_physics() -> Scenario:
	return Scenario("toy-phys", toy_start(), Conc(inertia) >> Seq(collide), DECLARED, frames=2,
		summary="Two movers converge on a resting object; collisions handled one at a time.", expected=TOY_EXPECTED)


def converge() -> Scenario:
	return Scenario("converge", toy_start(), Conc(inertia) >> Conc(collide), DECLARED, frames=1,
		summary="Same world with collisions run concurrently: both hit the resting object's velocity.")


def shapes_start():
	return new_state(SHAPES_SCHEMA, compose(
		spawn({POS: 1, VEL: 6, ROT: 0, SPIN: 90}),
		spawn({POS: 7}),
		spawn({POS: 9, VEL: -2, ROT: 45, SPIN: -15}),
	))


def manual() -> Scenario:
	return Scenario("manual", shapes_start(), Seq(inertia) >> Seq(rotate) >> Seq(collide) >> Seq(render), DECLARED,
		frames=2, summary="Every system sequential, one after the other.")


def semi_auto() -> Scenario:
	return Scenario("semi-auto", shapes_start(), (Conc(inertia) | Seq(rotate)) >> Seq(collide) >> Seq(render), DECLARED,
		frames=2, summary="Movement and rotation side by side, then collisions and rendering.")
