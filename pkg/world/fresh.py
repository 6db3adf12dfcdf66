import logging
import threading
from typing import Dict, Iterable, List, Protocol

from world.schema import EntityId

log = logging.getLogger(__name__)


class FreshSource(Protocol):
	def take(self, next_fresh: EntityId) -> EntityId: ...


class RecordingFresh:
	"""Allocates from the state's counter and remembers what it handed out."""
	def __init__(self): self.ids: List[EntityId] = []
	def take(self, next_fresh: EntityId) -> EntityId:
		self.ids.append(next_fresh); return next_fresh


class ReplayFresh:
	"""Hands out previously recorded ids, then falls back to the counter."""
	def __init__(self, ids: Iterable[EntityId], sink: List[EntityId] | None = None):
		self._ids = list(ids); self._pos = 0; self._sink = sink
	def take(self, next_fresh: EntityId) -> EntityId:
		if self._pos < len(self._ids):
			e = self._ids[self._pos]; self._pos += 1; return e
		if self._sink is not None: self._sink.append(next_fresh)
		return next_fresh


class FreshPlan:
	"""Fresh ids keyed by invocation tag.

	The first application of a tag records the ids it allocates; later
	applications of the same tag replay them, so outcomes of different
	orderings can be compared without renaming.
	"""
	def __init__(self):
		self._ids: Dict[int, List[EntityId]] = {}
		self._lock = threading.Lock()

	def source(self, tag: int) -> FreshSource:
		with self._lock:
			if tag in self._ids:
				recorded = self._ids[tag]
				return ReplayFresh(list(recorded), sink=recorded)
			recorded = self._ids.setdefault(tag, [])
		return ReplayFresh((), sink=recorded)
