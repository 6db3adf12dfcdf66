import logging
from dataclasses import dataclass
from typing import Iterator, Tuple

from systems.system import System
from utils.constants import ROOT_NODE

log = logging.getLogger(__name__)


class Schedule:
	"""Finite schedule tree. `a | b` is Par(a, b); `a >> b` is SeqComp(a, b)."""
	__slots__ = ()

	def __or__(self, other: "Schedule") -> "Par":
		if not isinstance(other, Schedule): return NotImplemented
		return Par(self, other)

	def __rshift__(self, other: "Schedule") -> "SeqComp":
		if not isinstance(other, Schedule): return NotImplemented
		return SeqComp(self, other)

	def children(self) -> Tuple["Schedule", ...]: return ()

	def walk(self, path: str = ROOT_NODE) -> Iterator[Tuple[str, "Schedule"]]:
		"""Pre-order (path, node) pairs; children of `p` are `p.0` and `p.1`."""
		stack = [(path, self)]
		while stack:
			p, node = stack.pop()
			yield p, node
			kids = node.children()
			for i in reversed(range(len(kids))): stack.append((f"{p}.{i}", kids[i]))

	def systems(self) -> Iterator[System]:
		for _, node in self.walk():
			if isinstance(node, (Conc, Seq)): yield node.system

	def size(self) -> int: return sum(1 for _ in self.walk())

	def describe(self) -> str: raise NotImplementedError


@dataclass(frozen=True, slots=True)
class Conc(Schedule):
	system: System
	def describe(self): return f"Conc {self.system.name}"
	def __str__(self): return self.describe()


@dataclass(frozen=True, slots=True)
class Seq(Schedule):
	system: System
	def describe(self): return f"Seq {self.system.name}"
	def __str__(self): return self.describe()


@dataclass(frozen=True, slots=True)
class Par(Schedule):
	left: Schedule
	right: Schedule
	def children(self): return (self.left, self.right)
	def describe(self): return "∥"
	def __str__(self): return f"({self.left} ∥ {self.right})"


@dataclass(frozen=True, slots=True)
class SeqComp(Schedule):
	left: Schedule
	right: Schedule
	def children(self): return (self.left, self.right)
	def describe(self): return "⨟"
	def __str__(self): return f"({self.left} ⨟ {self.right})"


def count_par(z: Schedule) -> int:
	return sum(1 for _, node in z.walk() if isinstance(node, Par))
