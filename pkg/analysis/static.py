import logging
from typing import AbstractSet, List, Mapping, Optional, Set, Union

from analysis.safety import Rule, RuleStep, SafetyReport, Verdict
from queries.grammar import ComponentSlot, OptionalSlot, PairSlot, Shape
from scheduling.schedule import Conc, Par, Schedule, Seq, SeqComp
from systems.system import System
from utils.constants import ROOT_NODE
from utils.errors import AnalysisError, SchemaError
from world.schema import ComponentKind, Schema

log = logging.getLogger(__name__)

DeclaredLabels = Mapping[Union[System, str], AbstractSet[str]]


def _slot_labels(shape: Shape) -> List[str]:
	if isinstance(shape, (ComponentSlot, OptionalSlot)): return [shape.label]
	if isinstance(shape, PairSlot): return _slot_labels(shape.left) + _slot_labels(shape.right)
	return []


def check_static_singleton(schema: Schema, s: System) -> bool:
	"""True iff s has a one-query vector whose results carry no entity references.

	Such a system only writes the entity it matched, so Conc(s) is safe at every state.
	"""
	if s.query.dim != 1: return False
	try:
		kinds = [schema.kind_of(label) for shape in s.shape for label in _slot_labels(shape)]
	except SchemaError as e:
		log.warning(f"Static singleton '{s.name}': {e}")
		return False
	return all(k is not ComponentKind.ENTITY_REF for k in kinds)


def declared_for(declared: DeclaredLabels, s: System) -> AbstractSet[str]:
	if s in declared: return declared[s]
	if s.name in declared: return declared[s.name]
	raise AnalysisError(f"No declared labels for system '{s.name}'")


class _StaticChecker:
	def __init__(self, schema: Optional[Schema], declared: DeclaredLabels):
		self.schema = schema; self.declared = declared; self.steps: List[RuleStep] = []

	def labels(self, z: Schedule) -> Set[str]:
		out: Set[str] = set()
		for s in z.systems(): out |= set(declared_for(self.declared, s))
		return out

	def check(self, z: Schedule, path: str) -> Verdict:
		if isinstance(z, Seq):
			v = Verdict.SAFE; rule = Rule.SEQ_ALWAYS_SAFE
		elif isinstance(z, Conc):
			rule = Rule.STATIC_SINGLETON_QUERY
			ok = self.schema is not None and check_static_singleton(self.schema, z.system)
			v = Verdict.SAFE if ok else Verdict.UNKNOWN
		elif isinstance(z, (Par, SeqComp)):
			idx = len(self.steps); self.steps.append(None)  # type: ignore[arg-type]
			left = self.check(z.left, f"{path}.0"); right = self.check(z.right, f"{path}.1")
			ok = left is Verdict.SAFE and right is Verdict.SAFE
			rule = Rule.SEQCOMP_OF_SAFE
			if isinstance(z, Par):
				rule = Rule.STATIC_DISJOINT_LABELS
				ok = ok and not (self.labels(z.left) & self.labels(z.right))
			v = Verdict.SAFE if ok else Verdict.UNKNOWN
			self.steps[idx] = RuleStep(node=path, describe=z.describe(), rule=rule, verdict=v)
			return v
		else:
			raise TypeError(f"Not a schedule: {z!r}")
		self.steps.append(RuleStep(node=path, describe=z.describe(), rule=rule, verdict=v))
		return v


def check_static(schema: Optional[Schema], z: Schedule, declared_labels: DeclaredLabels) -> SafetyReport:
	"""State-independent verdict from the two static rules plus the structural ones.

	Raises:
		AnalysisError: A system in `z` has no declared labels.
	"""
	checker = _StaticChecker(schema, declared_labels)
	for s in z.systems(): declared_for(declared_labels, s)
	verdict = checker.check(z, ROOT_NODE)
	return SafetyReport(verdict=verdict, rule_trace=checker.steps)


def check_static_disjoint_labels(z: Schedule, z2: Schedule, declared_labels: DeclaredLabels, schema: Optional[Schema] = None) -> bool:
	"""True iff z and z2 are statically safe and their declared label sets do not meet.

	Then Par(z, z2) is safe at every state. Conc leaves count as statically
	safe only when a schema is given and they pass check_static_singleton.
	"""
	return check_static(schema, Par(z, z2), declared_labels).safe
