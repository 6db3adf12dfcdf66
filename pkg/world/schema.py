import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Final, Iterable, Tuple, Union

from utils.constants import MAX_ENTITY
from utils.errors import CapacityError, SchemaError

log = logging.getLogger(__name__)

UNIT: Final[tuple] = ()  # Payload of flags and result of Excl


class ComponentKind(Enum):
	INTEGER = "Integer"
	FLAG = "Flag"
	ENTITY_REF = "EntityRef"


@dataclass(frozen=True, order=True, slots=True)
class EntityId:
	"""Opaque 64-bit entity identifier; ordering is the numeric one."""

	value: int

	def __post_init__(self):
		if isinstance(self.value, bool) or not isinstance(self.value, int):
			raise TypeError(f"EntityId needs an int, got {self.value!r}")
		if self.value < 0 or self.value > MAX_ENTITY:
			raise CapacityError(f"EntityId {self.value} outside 0..2^64-1")

	def __str__(self) -> str:
		return f"e{self.value}"

	def __repr__(self) -> str:
		return f"e{self.value}"


Payload = Union[int, tuple, EntityId]


@dataclass(frozen=True, slots=True)
class ComponentValue:
	label: str
	payload: Payload


def payload_fits(kind: ComponentKind, payload: object) -> bool:
	if kind is ComponentKind.INTEGER:
		return isinstance(payload, int) and not isinstance(payload, bool)
	if kind is ComponentKind.FLAG:
		return payload == UNIT
	return isinstance(payload, EntityId)


@dataclass(frozen=True)
class Schema:
	"""Ordered, duplicate-free list of component labels and their payload kinds.

	Two schemas are equal when their entries are equal in order.
	"""

	entries: Tuple[Tuple[str, ComponentKind], ...]
	_kinds: Dict[str, ComponentKind] = field(init=False, repr=False, compare=False, hash=False)

	def __post_init__(self):
		entries = tuple((str(label), ComponentKind(kind)) for label, kind in self.entries)
		kinds: Dict[str, ComponentKind] = {}
		for label, kind in entries:
			if label in kinds:
				raise SchemaError(f"Duplicate label '{label}' in schema")
			kinds[label] = kind
		object.__setattr__(self, "entries", entries)
		object.__setattr__(self, "_kinds", kinds)

	@classmethod
	def of(cls, *pairs: Tuple[str, Union[ComponentKind, str]]) -> "Schema":
		return cls(tuple(pairs))

	@property
	def labels(self) -> Tuple[str, ...]:
		return tuple(label for label, _ in self.entries)

	def __contains__(self, label: object) -> bool:
		return label in self._kinds

	def __iter__(self):
		return iter(self.entries)

	def __len__(self) -> int:
		return len(self.entries)

	def kind_of(self, label: str) -> ComponentKind:
		try:
			return self._kinds[label]
		except KeyError:
			raise SchemaError(f"Unknown label '{label}'") from None

	def require(self, labels: Iterable[str]) -> None:
		for label in labels:
			self.kind_of(label)

	def check_value(self, label: str, value: ComponentValue) -> None:
		"""Raise SchemaError unless `value` may be stored under `label`."""
		kind = self.kind_of(label)
		if value.label != label:
			raise SchemaError(f"Value tagged '{value.label}' stored under '{label}'")
		if not payload_fits(kind, value.payload):
			raise SchemaError(f"Payload {value.payload!r} is not a {kind.value} for '{label}'")
