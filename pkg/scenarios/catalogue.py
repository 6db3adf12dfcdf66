import logging
import random
from dataclasses import dataclass
from typing import Callable, FrozenSet, List, Optional, Tuple

from queries.engine import EntityMatch
from queries.grammar import Anyway, Excl, Incl
from scenarios.physics import POS, VEL, collide, inertia
from systems.system import System, system
from world.mutation import NIL, Detach, Fresh, Mutation, attach
from world.schema import UNIT, ComponentKind, Schema

log = logging.getLogger(__name__)

Built = Tuple[System, FrozenSet[str]]


@dataclass(frozen=True)
class SystemTemplate:
	"""Parameterised pure system plus the labels its instances may write."""
	name: str
	build: Callable[[random.Random, Schema], Optional[Built]]


LAYOUTS: List[Schema] = [
	Schema.of((POS, ComponentKind.INTEGER), (VEL, ComponentKind.INTEGER)),
	Schema.of((POS, ComponentKind.INTEGER), (VEL, ComponentKind.INTEGER), ("Tag", ComponentKind.FLAG)),
	Schema.of((POS, ComponentKind.INTEGER), (VEL, ComponentKind.INTEGER), ("Link", ComponentKind.ENTITY_REF)),
	Schema.of(("Int", ComponentKind.INTEGER)),
]


def _of_kind(schema: Schema, kind: ComponentKind) -> List[str]:
	return [label for label, k in schema if k is kind]

def _int_label(rng: random.Random, schema: Schema) -> Optional[str]:
	labels = _of_kind(schema, ComponentKind.INTEGER)
	return rng.choice(labels) if labels else None


def _physics(s: System) -> Callable[[random.Random, Schema], Optional[Built]]:
	def build(rng, schema):
		if POS not in schema or VEL not in schema: return None
		return s, frozenset({POS, VEL} if s is collide else {POS})
	return build


def _adjust(rng: random.Random, schema: Schema) -> Optional[Built]:
	label = _int_label(rng, schema)
	if label is None: return None
	bound = rng.randint(-2, 3); up = rng.random() < 0.5
	name = f"{'inc' if up else 'dec'}[{label}<{bound}]"
	@system(name, Incl(label))
	def adjust(m: EntityMatch) -> Mutation:
		n = m.result.payload
		if up: return attach(label, m.entity, n + 1) if n < bound else NIL
		return NIL if n < bound else attach(label, m.entity, n - 1)
	return adjust, frozenset({label})


def _set_const(rng: random.Random, schema: Schema) -> Optional[Built]:
	label = _int_label(rng, schema)
	if label is None: return None
	k = rng.randint(0, 2)
	@system(f"set[{label}={k}]", Incl(label))
	def set_const(m: EntityMatch) -> Mutation: return attach(label, m.entity, k)
	return set_const, frozenset({label})


def _insert(rng: random.Random, schema: Schema) -> Optional[Built]:
	labels = [l for l, k in schema if k is not ComponentKind.ENTITY_REF]
	label = rng.choice(labels)
	payload = UNIT if schema.kind_of(label) is ComponentKind.FLAG else rng.randint(0, 2)
	@system(f"insert[{label}]", Excl(label))
	def insert(m: EntityMatch) -> Mutation: return attach(label, m.entity, payload)
	return insert, frozenset({label})


def _spawn_from(rng: random.Random, schema: Schema) -> Optional[Built]:
	dst = _int_label(rng, schema)
	if dst is None: return None
	src = rng.choice(schema.labels); k = rng.randint(-1, 1)
	@system(f"spawn[{src}->{dst}]", Incl(src))
	def spawn_from(m: EntityMatch) -> Mutation: return Fresh(lambda e: attach(dst, e, k))
	return spawn_from, frozenset({dst})


def _remove(rng: random.Random, schema: Schema) -> Optional[Built]:
	label = rng.choice(schema.labels)
	@system(f"remove[{label}]", Incl(label))
	def remove(m: EntityMatch) -> Mutation: return Detach(label, m.entity)
	return remove, frozenset({label})


def _deferred_set(rng: random.Random, schema: Schema) -> Optional[Built]:
	dst = _int_label(rng, schema)
	if dst is None: return None
	src = rng.choice(schema.labels); k = rng.randint(0, 2)
	@system(f"dset[{src}:{dst}={k}]", Anyway(src))
	def deferred_set(m: EntityMatch) -> Mutation: return attach(dst, m.entity, k)
	return deferred_set, frozenset({dst})


def _deferred_remove(rng: random.Random, schema: Schema) -> Optional[Built]:
	src, dst = rng.choice(schema.labels), rng.choice(schema.labels)
	@system(f"ddel[{src}:{dst}]", Anyway(src))
	def deferred_remove(m: EntityMatch) -> Mutation: return Detach(dst, m.entity)
	return deferred_remove, frozenset({dst})


def _push(rng: random.Random, schema: Schema) -> Optional[Built]:
	label = _int_label(rng, schema)
	if label is None: return None
	@system(f"push[{label}]", Incl(label), Incl(label))
	def push(m: EntityMatch) -> Mutation:
		(a, b), (va, vb) = m.entities, m.results
		return attach(label, b, va.payload) if a != b and va.payload < vb.payload else NIL
	return push, frozenset({label})


def _link(rng: random.Random, schema: Schema) -> Optional[Built]:
	refs = _of_kind(schema, ComponentKind.ENTITY_REF); label = _int_label(rng, schema)
	if not refs or label is None: return None
	ref = refs[0]
	@system(f"link[{ref}]", Incl(label), Incl(label))
	def link(m: EntityMatch) -> Mutation:
		(a, b), (va, vb) = m.entities, m.results
		return attach(ref, a, b) if a != b and va.payload <= vb.payload else NIL
	return link, frozenset({ref})


def _follow(rng: random.Random, schema: Schema) -> Optional[Built]:
	refs = _of_kind(schema, ComponentKind.ENTITY_REF); label = _int_label(rng, schema)
	if not refs or label is None: return None
	ref = refs[0]
	@system(f"follow[{ref}->{label}]", Incl(ref))
	def follow(m: EntityMatch) -> Mutation: return attach(label, m.result.payload, 0)
	return follow, frozenset({label})


def _observe(rng: random.Random, schema: Schema) -> Optional[Built]:
	label = rng.choice(schema.labels)
	@system(f"observe[{label}]", Incl(label))
	def observe(m: EntityMatch) -> Mutation: return NIL
	return observe, frozenset()


CATALOGUE: List[SystemTemplate] = [
	SystemTemplate("inertia", _physics(inertia)),
	SystemTemplate("collide", _physics(collide)),
	SystemTemplate("adjust", _adjust),
	SystemTemplate("set-const", _set_const),
	SystemTemplate("insert", _insert),
	SystemTemplate("spawn", _spawn_from),
	SystemTemplate("remove", _remove),
	SystemTemplate("deferred-set", _deferred_set),
	SystemTemplate("deferred-remove", _deferred_remove),
	SystemTemplate("push", _push),
	SystemTemplate("link", _link),
	SystemTemplate("follow", _follow),
	SystemTemplate("observe", _observe),
]


def draw_system(rng: random.Random, schema: Schema) -> Built:
	"""A random applicable template, instantiated."""
	for t in rng.sample(CATALOGUE, len(CATALOGUE)):
		built = t.build(rng, schema)
		if built is not None: return built
	raise LookupError(f"No template fits {schema.labels}")
