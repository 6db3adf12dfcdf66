import random

from hypothesis import strategies as st

from queries.engine import eval_query_vector
from queries.grammar import Excl, Incl
from scenarios.catalogue import LAYOUTS, draw_system
from scenarios.categories import CATEGORIES
from scenarios.fuzz import random_start
from scenarios.physics import PHYSICS_SCHEMA, POS, VEL, inertia, toy_start
from scheduling.interpreter import apply_schedule
from scheduling.schedule import Conc
from systems.production import apply_system
from world.influence import mutation_influence
from world.mutation import Detach, attach, compose, spawn
from world.schema import EntityId
from world.state import new_state

E0, E1, E2, E3, E4 = (EntityId(i) for i in range(5))

# Toy-world queries: movers, and objects at rest
X = Incl(POS) & Incl(VEL)
Y = Incl(POS) & Excl(VEL)

LABELS = [POS, VEL]
small = st.integers(-3, 3)
entity_ids = st.integers(0, 5).map(EntityId)

rows = st.fixed_dictionaries({}, optional={POS: small, VEL: small})


@st.composite
def states(draw, max_entities=5):
	"""Small Pos/Vel worlds built through spawn, so ids are e0..e(n-1)."""
	rs = draw(st.lists(rows, max_size=max_entities))
	return new_state(PHYSICS_SCHEMA, compose(*(spawn(r) for r in rs)))


def movers(n):
	"""n objects that keep moving, none at rest."""
	return new_state(PHYSICS_SCHEMA, compose(*(spawn({POS: 10 * i, VEL: 1}) for i in range(n))))


attaches = st.builds(lambda e, l, v: attach(l, e, v), entity_ids, st.sampled_from(LABELS), small)
detaches = st.builds(lambda e, l: Detach(l, e), entity_ids, st.sampled_from(LABELS))


@st.composite
def plain_mutations(draw, max_size=6):
	"""Compositions of attaches and detaches, no Fresh."""
	return compose(*draw(st.lists(st.one_of(attaches, detaches), max_size=max_size)))


# Fuzz worlds over every layout, plus the toy world at the moment its collisions fire
catalogue_worlds = st.one_of(
	st.builds(lambda seed, schema: random_start(random.Random(seed), schema, 6), st.integers(0, 10_000), st.sampled_from(LAYOUTS)),
	st.just(apply_schedule(toy_start(), Conc(inertia))),
)


@st.composite
def catalogue_mutations(draw, c, avoid=frozenset()):
	"""A catalogue or category system over up to three of its matches at `c`.

	Matches whose mutation may write a cell in `avoid` are left out.
	"""
	s, _ = draw_system(random.Random(draw(st.integers(0, 2**16))), c.schema)
	if POS in c.schema and VEL in c.schema and draw(st.integers(0, 3)) == 0:
		s = draw(st.sampled_from(CATEGORIES)).system()
	matches = eval_query_vector(c, s.query)
	picked = draw(st.lists(st.sampled_from(matches), max_size=3)) if matches else []
	return apply_system(s, [m for m in picked if not mutation_influence(s(m), sentinel_base=c.next_fresh) & avoid])
