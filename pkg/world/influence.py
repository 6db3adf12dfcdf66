from typing import FrozenSet, List, Optional, Set, Tuple

from utils.constants import SENTINEL_BASE
from world.mutation import Attach, Compose, Detach, Fresh, Mutation
from world.schema import EntityId

Cell = Tuple[EntityId, str]
Influence = FrozenSet[Cell]


def format_cell(cell: Tuple[object, str]) -> str:
	return f"{cell[0]}, {cell[1]}"


def mutation_influence(m: Mutation, *, sentinel_base: Optional[EntityId | int] = None) -> Influence:
	"""(entity, label) cells that `m` may attach or detach.

	A Fresh body is evaluated at two sentinel ids and only the cells common to
	both are kept, so cells of the new entity drop out. Nested Fresh nodes use
	the next pair of sentinels.
	"""
	if sentinel_base is None: base = SENTINEL_BASE
	else: base = sentinel_base.value if isinstance(sentinel_base, EntityId) else int(sentinel_base)
	return frozenset(_collect(m, base))


def _collect(m: Mutation, base: int) -> Set[Cell]:
	out: Set[Cell] = set()
	stack: List[Mutation] = [m]
	while stack:
		cur = stack.pop()
		if isinstance(cur, (Attach, Detach)): out.add((cur.entity, cur.label))
		elif isinstance(cur, Compose): stack.extend((cur.second, cur.first))
		elif isinstance(cur, Fresh):
			a = _collect(cur.body(EntityId(base)), base + 2)
			b = _collect(cur.body(EntityId(base + 1)), base + 2)
			out |= a & b
	return out
