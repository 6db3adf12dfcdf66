from dataclasses import dataclass
from functools import reduce
from typing import Callable, Mapping

from world.schema import ComponentValue, EntityId, Payload


class Mutation:
	"""Deferred world edit. Built from Attach, Detach, Compose, Fresh and Nil."""
	__slots__ = ()


@dataclass(frozen=True, slots=True)
class Attach(Mutation):
	label: str
	entity: EntityId
	value: ComponentValue


@dataclass(frozen=True, slots=True)
class Detach(Mutation):
	label: str
	entity: EntityId


@dataclass(frozen=True, slots=True)
class Compose(Mutation):
	first: Mutation
	second: Mutation


@dataclass(frozen=True, slots=True)
class Fresh(Mutation):
	body: Callable[[EntityId], Mutation] # must not inspect the id beyond passing it on


@dataclass(frozen=True, slots=True)
class Nil(Mutation): pass


NIL = Nil()

def compose(*ms: Mutation) -> Mutation:
	"""Left-to-right fold with Compose; no arguments gives Nil."""
	if not ms: return NIL
	return reduce(Compose, ms)

def attach(label: str, entity: EntityId, payload: Payload) -> Attach:
	return Attach(label, entity, ComponentValue(label, payload))

def fresh(body: Callable[[EntityId], Mutation]) -> Fresh: return Fresh(body)

def spawn(components: Mapping[str, Payload]) -> Fresh:
	"""Fresh entity carrying `components`."""
	comps = dict(components)
	return Fresh(lambda e: compose(*(attach(label, e, p) for label, p in comps.items())))
