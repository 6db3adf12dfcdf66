import logging
import random
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field

from config import settings
from queries.engine import EntityMatch, eval_query_vector, lookup_match
from scheduling.schedule import Conc, Par, Schedule, Seq, SeqComp, count_par
from systems.system import System
from utils.constants import ROOT_NODE
from utils.errors import EcsError, ParallelRuntimeError
from world.fresh import RecordingFresh, ReplayFresh
from world.mutation import Mutation
from world.schema import EntityId
from world.state import WorldState, apply_mutation

log = logging.getLogger(__name__)


class RunConfig(BaseModel):
	model_config = ConfigDict(frozen=True)
	workers: int = Field(default_factory=lambda: settings.default_workers, ge=1)
	seed: int = Field(default_factory=lambda: settings.default_seed)
	trace: bool = False


@dataclass(frozen=True)
class TraceEntry:
	step: int
	system: str
	tag: int
	node: str
	entities: Tuple[EntityId, ...]

	def render(self) -> str: return f"{self.step}: {self.system}#{self.tag} applied"


@dataclass(frozen=True)
class _Applied:
	step: int
	mutation: Mutation
	fresh_ids: Tuple[EntityId, ...]


class _SharedWorld:
	"""The one mutable state cell. Every read or write of it holds `_guard`."""

	def __init__(self, c: WorldState, trace: bool):
		self._state = c
		self._guard = threading.Lock()
		self._step = 0
		self._tags = 0
		self.trace: Optional[List[TraceEntry]] = [] if trace else None

	def take_tags(self, n: int) -> range:
		with self._guard:
			start = self._tags; self._tags += n
		return range(start, start + n)

	def apply(self, s: System, tag: int, node: str, match: EntityMatch, m: Mutation) -> _Applied:
		rec = RecordingFresh()
		with self._guard:
			self._state = apply_mutation(self._state, m, fresh=rec)
			step = self._step; self._step += 1
			if self.trace is not None: self.trace.append(TraceEntry(step, s.name, tag, node, match.entities))
		return _Applied(step, m, tuple(rec.ids))

	@property
	def state(self) -> WorldState:
		with self._guard: return self._state


def _replay(view: WorldState, applied: Sequence[_Applied]) -> WorldState:
	# Re-apply a region's own writes, in the order they hit the shared state, with the same fresh ids
	for a in sorted(applied, key=lambda a: a.step):
		view = apply_mutation(view, a.mutation, fresh=ReplayFresh(a.fresh_ids))
	return view


class _Runner:
	def __init__(self, shared: _SharedWorld, cfg: RunConfig, pool: Optional[ThreadPoolExecutor], regions: Optional[ThreadPoolExecutor]):
		self.shared = shared; self.cfg = cfg; self.pool = pool; self.regions = regions
		self.log = logging.getLogger(self.__class__.__name__)

	def _invoke(self, s: System, tag: int, node: str, match: EntityMatch) -> _Applied:
		m = s(match)  # outside the guard
		return self.shared.apply(s, tag, node, match, m)

	def run(self, z: Schedule, view: WorldState, path: str) -> List[_Applied]:
		"""Run `z` reading from `view`; returns the writes it applied to the shared state."""
		if isinstance(z, Conc):
			s = z.system
			matches = eval_query_vector(view, s.query)
			jobs = list(zip(self.shared.take_tags(len(matches)), matches))
			if self.pool is None:
				return [self._invoke(s, tag, path, m) for tag, m in jobs]
			random.Random(f"{self.cfg.seed}/{path}").shuffle(jobs)
			futures = [self.pool.submit(self._invoke, s, tag, path, m) for tag, m in jobs]
			return [f.result() for f in futures]
		if isinstance(z, Seq):
			s = z.system; out: List[_Applied] = []; cur = view
			for m in eval_query_vector(view, s.query):
				w = lookup_match(cur, s.query, m.entities)
				if w is None: continue
				a = self._invoke(s, self.shared.take_tags(1)[0], path, EntityMatch(m.entities, w))
				out.append(a); cur = _replay(cur, [a])
			return out
		if isinstance(z, Par):
			if self.regions is None:
				return self.run(z.left, view, f"{path}.0") + self.run(z.right, view, f"{path}.1")
			right = self.regions.submit(self.run, z.right, view, f"{path}.1")
			left = self.run(z.left, view, f"{path}.0")
			return left + right.result()
		if isinstance(z, SeqComp):
			left = self.run(z.left, view, f"{path}.0")
			right = self.run(z.right, _replay(view, left), f"{path}.1")  # barrier: left fully applied
			return left + right
		raise TypeError(f"Not a schedule: {z!r}")


def run_parallel(c: WorldState, z: Schedule, cfg: Optional[RunConfig] = None) -> Tuple[WorldState, Optional[List[TraceEntry]]]:
	"""Execute `z` on real threads against one shared, lock-guarded state.

	Each invocation's mutation is applied as soon as its function returns.
	Par sides run concurrently, Conc matches are dispatched to the worker pool
	in a seed-shuffled order, and SeqComp's right side waits for the left.
	With one worker everything runs inline in canonical order.

	Args:
		c: Start state.
		z: Schedule to run.
		cfg: Worker count, dispatch seed and tracing switch.

	Returns:
		The final state and, when tracing, the applied-invocation order.

	Raises:
		ParallelRuntimeError: An invocation or the pool failed; no state is returned.
	"""
	cfg = cfg or RunConfig()
	shared = _SharedWorld(c, cfg.trace)
	pool = ThreadPoolExecutor(max_workers=cfg.workers, thread_name_prefix="ecs-worker") if cfg.workers > 1 else None
	pars = count_par(z)
	regions = ThreadPoolExecutor(max_workers=pars, thread_name_prefix="ecs-region") if pool is not None and pars else None
	try:
		_Runner(shared, cfg, pool, regions).run(z, c, ROOT_NODE)
	except EcsError as e:
		if isinstance(e, ParallelRuntimeError): raise
		raise ParallelRuntimeError(f"Parallel run failed: {e}") from e
	except Exception as e:
		log.error(f"Worker failed: {e}", exc_info=True)
		raise ParallelRuntimeError(f"Parallel run failed: {e}") from e
	finally:
		if regions is not None: regions.shutdown(wait=True)
		if pool is not None: pool.shutdown(wait=True)
	log.debug(f"Parallel run: workers={cfg.workers}, seed={cfg.seed}, regions={pars}")
	return shared.state, shared.trace
