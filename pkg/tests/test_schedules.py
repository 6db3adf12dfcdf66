import itertools

import networkx as nx
import pytest
from hypothesis import given, settings as hsettings, strategies as st

from scenarios.disjoint import DISJOINT_EXPECTED, decrement, disjoint_entities, increment
from scenarios.physics import TOY_EXPECTED, VEL, collide, inertia, render, toy_physics
from scheduling import (Conc, Par, Seq, SeqComp, apply_linearization, apply_schedule, canonical_linearization,
	count_linearizations, count_par, enumerate_linearizations, interpret_schedule, invocation_po)
from tests.common import E0, E1, E2, movers, states
from utils.errors import TooManyLinearizations
from world import ComponentValue, Compose, EntityId, apply_mutation, compose, new_state, render_state

schedules = st.recursive(
	st.sampled_from([inertia, collide, render]).flatmap(lambda s: st.sampled_from([Conc(s), Seq(s)])),
	lambda inner: st.one_of(st.builds(Par, inner, inner), st.builds(SeqComp, inner, inner)),
	max_leaves=3,
)


# --- tree and operators ---

def test_operators_build_nodes():
	z = Conc(inertia) | Seq(collide)
	assert z == Par(Conc(inertia), Seq(collide))
	assert Conc(inertia) >> Seq(collide) == SeqComp(Conc(inertia), Seq(collide))


def test_walk_is_preorder_with_paths():
	z = (Conc(inertia) | Seq(render)) >> Seq(collide)
	assert [(p, n.describe()) for p, n in z.walk()] == [
		("z", "⨟"), ("z.0", "∥"), ("z.0.0", "Conc inertia"), ("z.0.1", "Seq render"), ("z.1", "Seq collide")]
	assert [s.name for s in z.systems()] == ["inertia", "render", "collide"]
	assert z.size() == 5 and count_par(z) == 1


# --- reference interpreter ---

def test_toy_physics_frames():
	assert toy_physics().run() == list(TOY_EXPECTED)


def test_disjoint_entities_frames():
	assert disjoint_entities().run() == list(DISJOINT_EXPECTED)


def test_zero_frames_renders_start_only():
	assert toy_physics().run(frames=0) == [TOY_EXPECTED[0] + " END"]


def test_par_reads_the_same_state(start):
	m = interpret_schedule(start, Conc(inertia) | Conc(inertia))
	assert isinstance(m, Compose) and m.first == m.second
	assert apply_schedule(start, Conc(inertia) | Conc(inertia)) == apply_schedule(start, Conc(inertia))


def test_seqcomp_right_reads_left_result(start):
	once = apply_schedule(start, Conc(inertia))
	assert apply_schedule(start, Conc(inertia) >> Conc(inertia)) == apply_schedule(once, Conc(inertia))


def test_lost_write_under_concurrent_collisions(start, lost_write_schedule):
	after = apply_schedule(start, lost_write_schedule)
	assert after.get(VEL, E1) == ComponentValue(VEL, -1)
	assert after.next_fresh == EntityId(5)


def test_par_of_disjoint_counters_reads_the_frame_start():
	c = disjoint_entities().start
	par = apply_schedule(c, Conc(increment) | Conc(decrement))
	assert render_state(par) == DISJOINT_EXPECTED[1]
	# in sequence, decrement already sees the incremented counter
	assert render_state(apply_schedule(c, Conc(increment) >> Conc(decrement))) != DISJOINT_EXPECTED[1]


# --- invocation partial order ---

def test_po_of_toy(start, toy_schedule):
	po = invocation_po(start, toy_schedule)
	assert [(i.name, i.node, i.match.entities) for i in po] == [
		("inertia#0", "z.0", (E0,)), ("inertia#1", "z.0", (E2,)), ("collide#2", "z.1", (E0, E1))]
	assert po.precedes(0, 2) and po.precedes(1, 2)
	assert not po.precedes(0, 1) and not po.precedes(1, 0)
	assert all(po.precedes(t, t) for t in range(3))


def test_po_of_converge(start, lost_write_schedule):
	po = invocation_po(start, lost_write_schedule)
	assert [i.name for i in po] == ["inertia#0", "inertia#1", "collide#2", "collide#3"]
	assert [i.match.entities for i in po.under("z.1")] == [(E0, E1), (E2, E1)]
	unordered = [(a, b) for a, b in itertools.combinations(range(4), 2) if not po.precedes(a, b) and not po.precedes(b, a)]
	assert unordered == [(0, 1), (2, 3)]
	assert count_linearizations(po) == 4


def test_seq_is_a_chain():
	po = invocation_po(movers(4), Seq(inertia))
	assert len(po) == 4
	assert all(po.precedes(a, b) for a, b in itertools.combinations(range(4), 2))
	assert len(enumerate_linearizations(po)) == 1


def test_conc_is_an_antichain():
	po = invocation_po(movers(3), Conc(inertia))
	lins = enumerate_linearizations(po)
	assert len(lins) == 6
	assert [tuple(i.tag for i in lin) for lin in lins] == sorted(itertools.permutations(range(3)))


def test_enumeration_guard():
	po = invocation_po(movers(4), Conc(inertia))
	with pytest.raises(TooManyLinearizations) as err:
		enumerate_linearizations(po, limit=5)
	assert err.value.at_least == 6 and err.value.limit == 5
	assert count_linearizations(po) == 24


def test_empty_po(schema):
	po = invocation_po(new_state(schema, compose()), Conc(inertia) | Seq(collide))
	assert len(po) == 0
	assert enumerate_linearizations(po) == [()]
	assert count_linearizations(po) == 1


def test_long_chain_is_enumerated_without_recursion():
	po = invocation_po(movers(1000), Seq(inertia))
	assert len(po) == 1000
	lins = enumerate_linearizations(po)
	assert len(lins) == 1 and [i.tag for i in lins[0]] == list(range(1000))
	assert count_linearizations(po) == 1


def test_canonical_linearization_reproduces_schedule(start, lost_write_schedule):
	po = invocation_po(start, lost_write_schedule)
	lin = canonical_linearization(po)
	assert po.respects(lin)
	assert apply_linearization(start, lin) == apply_schedule(start, lost_write_schedule)


def test_respects_rejects_bad_orders(start, toy_schedule):
	po = invocation_po(start, toy_schedule)
	a, b, c = po.elements
	assert po.respects((b, a, c))
	assert not po.respects((c, a, b))
	assert not po.respects((a, b))


@hsettings(max_examples=60)
@given(states(max_entities=4), schedules)
def test_enumeration_matches_networkx(c, z):
	po = invocation_po(c, z)
	if not len(po) or count_linearizations(po) > 200: return
	lins = enumerate_linearizations(po)
	ours = [tuple(i.tag for i in lin) for lin in lins]
	theirs = {tuple(order) for order in nx.all_topological_sorts(po.graph)}
	assert ours == sorted(set(ours))
	assert set(ours) == theirs
	assert len(ours) == count_linearizations(po)
	assert all(po.respects(lin) for lin in lins)


@hsettings(max_examples=60)
@given(states(max_entities=4), schedules)
def test_canonical_linearization_is_the_interpreter(c, z):
	po = invocation_po(c, z)
	assert apply_linearization(c, canonical_linearization(po)) == apply_schedule(c, z)


@given(states(max_entities=4), schedules)
def test_interpreter_is_apply_of_interpretation(c, z):
	assert apply_schedule(c, z) == apply_mutation(c, interpret_schedule(c, z))
