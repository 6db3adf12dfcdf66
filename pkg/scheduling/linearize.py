import logging
from collections import defaultdict
from typing import Dict, List, Optional, Sequence, Tuple

from config import settings
from scheduling.invocations import Invocation, InvocationPO
from utils.errors import TooManyLinearizations
from world.fresh import FreshPlan
from world.state import WorldState, apply_mutation

log = logging.getLogger(__name__)

Linearization = Tuple[Invocation, ...]


def enumerate_linearizations(po: InvocationPO, limit: Optional[int] = None) -> List[Linearization]:
	"""Every topological order of `po`, lexicographic by tag.

	Backtracks over an explicit stack of frames, so long chains do not recurse.

	Raises:
		TooManyLinearizations: More than `limit` orders exist.
	"""
	limit = settings.linearization_limit if limit is None else limit
	by_tag = po.by_tag
	succ: Dict[int, List[int]] = {t: sorted(po.graph.successors(t)) for t in by_tag}
	indeg: Dict[int, int] = {t: po.graph.in_degree(t) for t in by_tag}
	prefix: List[int] = []
	out: List[Linearization] = []
	frames: List[List] = [[sorted(t for t, d in indeg.items() if d == 0), 0]]  # [available tags, next choice]

	def undo() -> None:
		t = prefix.pop()
		for n in succ[t]: indeg[n] += 1

	while frames:
		frame = frames[-1]
		if len(prefix) == len(by_tag):
			out.append(tuple(by_tag[t] for t in prefix))
			if len(out) > limit: raise TooManyLinearizations(len(out), limit)
			frames.pop()
			if prefix: undo()
			continue
		avail, i = frame
		if i == len(avail):
			frames.pop()
			if prefix: undo()
			continue
		frame[1] = i + 1
		t = avail[i]
		rest = [a for a in avail if a != t]
		for n in succ[t]:
			indeg[n] -= 1
			if indeg[n] == 0: rest.append(n)
		prefix.append(t)
		frames.append([sorted(rest), 0])
	log.debug(f"Enumerated {len(out)} linearizations of {len(by_tag)} invocations")
	return out


def count_linearizations(po: InvocationPO) -> int:
	"""Number of topological orders, counted layer by layer over down-sets without listing them."""
	tags = [i.tag for i in po.elements]
	index = {t: k for k, t in enumerate(tags)}
	preds = [0] * len(tags)
	for t in tags:
		for p in po.graph.predecessors(t): preds[index[t]] |= 1 << index[p]
	layer: Dict[int, int] = {0: 1}  # down-set bitmask -> orders reaching it
	for _ in tags:
		nxt: Dict[int, int] = defaultdict(int)
		for done, ways in layer.items():
			for k in range(len(tags)):
				if not done >> k & 1 and preds[k] & done == preds[k]: nxt[done | 1 << k] += ways
		layer = nxt
	return sum(layer.values())


def canonical_linearization(po: InvocationPO) -> Linearization:
	"""Elements in tag order, which always respects the order."""
	return tuple(sorted(po.elements, key=lambda i: i.tag))


def apply_linearization(c: WorldState, lin: Sequence[Invocation], *, fresh_plan: Optional[FreshPlan] = None) -> WorldState:
	"""Apply each invocation's captured mutation in turn; never re-queries.

	With a plan, an invocation whose fresh ids were recorded before reuses them.
	"""
	state = c
	for inv in lin:
		src = fresh_plan.source(inv.tag) if fresh_plan is not None else None
		state = apply_mutation(state, inv.mutation(), fresh=src)
	return state
