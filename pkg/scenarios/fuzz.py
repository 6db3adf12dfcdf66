import logging
import random
from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, List, Mapping, Optional

from pydantic import BaseModel, Field

from analysis.determinism import brute_force_determinism
from analysis.influence import invocation_influence
from analysis.safety import check_safe
from analysis.static import check_static_singleton
from config import settings
from runtime.parallel import RunConfig, run_parallel
from scenarios.catalogue import LAYOUTS, draw_system
from scenarios.physics import DECLARED, collide, inertia, toy_start
from scheduling.interpreter import apply_schedule
from scheduling.invocations import invocation_po
from scheduling.linearize import count_linearizations
from scheduling.schedule import Conc, Par, Schedule, Seq, SeqComp
from utils import localization as lang
from utils.errors import TooManyLinearizations
from world.mutation import attach, compose, spawn
from world.schema import UNIT, ComponentKind, EntityId, Schema
from world.state import WorldState, apply_mutation, live_entities, new_state, states_equal_upto_fresh

log = logging.getLogger(__name__)

WORKER_COUNTS = (1, 2, 4, 8)


class InstanceOutcome(str, Enum):
	SAFE_DET = "safe-deterministic"
	UNKNOWN_DET = "unknown-deterministic"
	UNKNOWN_NONDET = "unknown-nondeterministic"
	SAFE_NONDET = "safe-nondeterministic"
	SKIPPED = "skipped"


@dataclass(frozen=True)
class FuzzInstance:
	index: int
	start: WorldState
	schedule: Schedule
	declared: Mapping[str, FrozenSet[str]]


class InstanceReport(BaseModel):
	index: int
	outcome: InstanceOutcome
	invocations: int = 0
	linearizations: int = 0
	divergences: int = 0
	label_misses: List[str] = Field(default_factory=list)
	static_misses: List[str] = Field(default_factory=list)
	witness: Optional[str] = None


class FuzzSummary(BaseModel):
	instances: int
	seed: int
	max_invocations: int
	counts: Dict[InstanceOutcome, int] = Field(default_factory=lambda: {o: 0 for o in InstanceOutcome})
	divergences: int = 0
	label_misses: int = 0
	violations: List[str] = Field(default_factory=list)

	@property
	def ok(self) -> bool: return not self.violations

	def add(self, r: InstanceReport) -> None:
		self.counts[r.outcome] += 1
		self.divergences += r.divergences
		self.label_misses += len(r.label_misses)
		if r.outcome is InstanceOutcome.SAFE_NONDET:
			self.violations.append(f"#{r.index} safe but non-deterministic\n{r.witness}")
		if r.divergences: self.violations.append(f"#{r.index} parallel run diverged from reference ({r.divergences}x)")
		self.violations += [f"#{r.index} {m}" for m in r.label_misses + r.static_misses]

	def render(self) -> str:
		c = self.counts
		out = [lang.MSG_FUZZ_SUMMARY.format(instances=self.instances, seed=self.seed, max_invocations=self.max_invocations,
			safe_det=c[InstanceOutcome.SAFE_DET], unknown_det=c[InstanceOutcome.UNKNOWN_DET],
			unknown_nondet=c[InstanceOutcome.UNKNOWN_NONDET], skipped=c[InstanceOutcome.SKIPPED],
			safe_nondet=c[InstanceOutcome.SAFE_NONDET], divergences=self.divergences, label_misses=self.label_misses)]
		out += [lang.MSG_FUZZ_VIOLATION.format(detail=v) for v in self.violations]
		return "\n".join(out)


def _payload(rng: random.Random, kind: ComponentKind):
	return rng.randint(-3, 3) if kind is ComponentKind.INTEGER else UNIT


def random_start(rng: random.Random, schema: Schema, max_entities: int) -> WorldState:
	"""Spawn up to `max_entities` rows, then point reference cells at entities that are live."""
	n = rng.randint(1, max_entities)
	refs = [label for label, kind in schema if kind is ComponentKind.ENTITY_REF]
	rows = [{label: _payload(rng, kind) for label, kind in schema if label not in refs and rng.random() < 0.6} for _ in range(n)]
	c = new_state(schema, compose(*(spawn(r) for r in rows)))
	live = sorted(live_entities(c))
	if not live: return c
	links = [attach(label, EntityId(i), rng.choice(live)) for i in range(n) for label in refs if rng.random() < 0.6]
	return apply_mutation(c, compose(*links))


def random_schedule(rng: random.Random, schema: Schema, budget: int, declared: Dict[str, FrozenSet[str]]) -> Schedule:
	"""Schedule tree of at most `budget` nodes; records each drawn system's labels in `declared`."""
	if budget < 3 or rng.random() < 0.35:
		s, labels = draw_system(rng, schema)
		declared[s.name] = labels
		return Conc(s) if rng.random() < 0.6 else Seq(s)
	inner = budget - 1
	left = rng.randint(1, inner - 1)
	l = random_schedule(rng, schema, left, declared)
	r = random_schedule(rng, schema, inner - left, declared)
	return Par(l, r) if rng.random() < 0.5 else SeqComp(l, r)


def generate_instance(rng: random.Random, index: int) -> FuzzInstance:
	layouts = [s for s in LAYOUTS if len(s) <= settings.fuzz_max_labels] or LAYOUTS[-1:]
	schema = rng.choice(layouts)
	declared: Dict[str, FrozenSet[str]] = {}
	z = random_schedule(rng, schema, settings.fuzz_max_nodes, declared)
	return FuzzInstance(index, random_start(rng, schema, settings.fuzz_max_entities), z, declared)


def generate_instances(instances: int, seed: int) -> List[FuzzInstance]:
	"""The seeded batch `fuzz` evaluates, in order."""
	rng = random.Random(seed)
	return [generate_instance(rng, i) for i in range(instances)]


def convergence_instance(index: int = 0) -> FuzzInstance:
	"""The lost-write schedule: concurrent collisions on the converging toy world."""
	return FuzzInstance(index, toy_start(), Conc(inertia) >> Conc(collide), DECLARED)


def evaluate_instance(inst: FuzzInstance, *, max_invocations: int, seed: int, limit: Optional[int] = None) -> InstanceReport:
	"""Classify one instance and cross-check it against brute force and the threaded runtime."""
	limit = settings.linearization_limit if limit is None else limit
	c, z = inst.start, inst.schedule
	po = invocation_po(c, z)
	if len(po) > max_invocations:
		log.debug(f"Fuzz inst {inst.index}: skip, {len(po)} invocations")
		return InstanceReport(index=inst.index, outcome=InstanceOutcome.SKIPPED, invocations=len(po))
	n_lins = count_linearizations(po)
	if n_lins > limit:
		log.debug(f"Fuzz inst {inst.index}: skip, {n_lins} lins")
		return InstanceReport(index=inst.index, outcome=InstanceOutcome.SKIPPED, invocations=len(po), linearizations=n_lins)

	label_misses = []
	for inv in po:
		extra = {l for _, l in invocation_influence(inv)} - set(inst.declared.get(inv.system.name, ()))
		if extra: label_misses.append(f"{inv.name} wrote undeclared {sorted(extra)}")

	static_misses = []
	for path, node in z.walk():
		if isinstance(node, Conc) and check_static_singleton(c.schema, node.system) and not check_safe(c, node).safe:
			static_misses.append(f"{path} {node.describe()} passes the singleton rule but is not Safe")

	report = check_safe(c, z)
	try:
		det = brute_force_determinism(c, z, limit)
	except TooManyLinearizations:
		return InstanceReport(index=inst.index, outcome=InstanceOutcome.SKIPPED, invocations=len(po))
	if report.safe: outcome = InstanceOutcome.SAFE_DET if det.deterministic else InstanceOutcome.SAFE_NONDET
	else: outcome = InstanceOutcome.UNKNOWN_DET if det.deterministic else InstanceOutcome.UNKNOWN_NONDET

	divergences = 0
	if report.safe:
		reference = apply_schedule(c, z)
		for k in range(settings.fuzz_parallel_seeds):
			cfg = RunConfig(workers=WORKER_COUNTS[k % len(WORKER_COUNTS)], seed=seed * 7919 + inst.index * 31 + k)
			final, _ = run_parallel(c, z, cfg)
			if not states_equal_upto_fresh(final, reference, fresh_base=c.next_fresh):
				divergences += 1
				log.error(f"Fuzz inst {inst.index}: parallel diverged (workers={cfg.workers}, seed={cfg.seed})")
	log.info(f"Fuzz inst {inst.index}: {outcome.value}, {len(po)} invs, {n_lins} lins")
	return InstanceReport(index=inst.index, outcome=outcome, invocations=len(po), linearizations=n_lins,
		divergences=divergences, label_misses=label_misses, static_misses=static_misses,
		witness=None if det.deterministic else det.render())


def fuzz(instances: int, max_invocations: int, seed: int, extra: Optional[List[FuzzInstance]] = None) -> FuzzSummary:
	"""Generate `instances` seeded worlds and schedules and check every verdict against brute force.

	`extra` instances are evaluated after the generated ones.
	"""
	summary = FuzzSummary(instances=instances, seed=seed, max_invocations=max_invocations)
	batch = generate_instances(instances, seed) + list(extra or ())
	for inst in batch:
		summary.add(evaluate_instance(inst, max_invocations=max_invocations, seed=seed))
	log.info(f"Fuzz done: {len(batch)} instances, {len(summary.violations)} violations")
	return summary
