import logging
from enum import Enum
from typing import Dict, List, Tuple

from pydantic import BaseModel, Field

from analysis.influence import influences
from scheduling.invocations import Invocation, invocation_po
from scheduling.schedule import Conc, Par, Schedule, Seq, SeqComp
from utils import localization as lang
from utils.constants import ROOT_NODE
from world.influence import Influence, format_cell
from world.state import WorldState

log = logging.getLogger(__name__)


class Verdict(str, Enum):
	SAFE = "Safe"
	UNSAFE = "Unsafe"
	UNKNOWN = "Unknown"


class Rule(str, Enum):
	SEQ_ALWAYS_SAFE = "SeqAlwaysSafe"
	SEQCOMP_OF_SAFE = "SeqCompOfSafe"
	CONC_PAIRWISE_DISJOINT = "ConcPairwiseDisjoint"
	PAR_DISJOINT_INFLUENCE = "ParDisjointInfluence"
	STATIC_SINGLETON_QUERY = "StaticSingletonQuery"
	STATIC_DISJOINT_LABELS = "StaticDisjointLabels"


class RuleStep(BaseModel):
	node: str
	describe: str
	rule: Rule
	verdict: Verdict


class Conflict(BaseModel):
	left: str
	right: str
	cells: List[Tuple[str, str]] = Field(default_factory=list)

	def lines(self) -> List[str]:
		return [lang.MSG_CONFLICT_LINE.format(cell=format_cell(cell), left=self.left, right=self.right) for cell in self.cells]


class SafetyReport(BaseModel):
	"""Verdict plus the rule applied at every node and the overlaps that blocked a Safe verdict."""
	verdict: Verdict
	rule_trace: List[RuleStep] = Field(default_factory=list)
	conflicts: List[Conflict] = Field(default_factory=list)

	@property
	def safe(self) -> bool: return self.verdict is Verdict.SAFE

	def render(self) -> str:
		out = []
		for step in self.rule_trace:
			depth = step.node.count(".")
			out.append(f"{'  ' * depth}{step.node} {step.describe} [{step.rule.value}] {step.verdict.value}")
		out.append(lang.MSG_CHECK_VERDICT.format(verdict=self.verdict.value))
		lines = [ln for c in self.conflicts for ln in c.lines()]
		if lines: out.append(lang.MSG_CHECK_CONFLICTS); out.extend(f"  {ln}" for ln in lines)
		else: out.append(lang.MSG_CHECK_NO_CONFLICTS)
		return "\n".join(out)


def _cells(infl: Influence) -> List[Tuple[str, str]]:
	return sorted(((str(e), l) for e, l in infl), key=lambda x: (int(x[0][1:]), x[1]))


class _DynamicChecker:
	def __init__(self, invs: List[Invocation], infl: Dict[int, Influence]):
		self.invs = invs; self.infl = infl
		self.steps: List[RuleStep] = []; self.conflicts: List[Conflict] = []

	def _step(self, path: str, z: Schedule, rule: Rule, v: Verdict) -> Verdict:
		self.steps.append(RuleStep(node=path, describe=z.describe(), rule=rule, verdict=v)); return v

	def _union(self, path: str) -> Tuple[List[Invocation], Influence]:
		invs = [i for i in self.invs if i.under(path)]
		out: set = set()
		for i in invs: out |= self.infl[i.tag]
		return invs, frozenset(out)

	def check(self, z: Schedule, path: str) -> Verdict:
		if isinstance(z, Seq): return self._step(path, z, Rule.SEQ_ALWAYS_SAFE, Verdict.SAFE)
		if isinstance(z, Conc):
			invs = [i for i in self.invs if i.node == path]
			ok = True
			for k, a in enumerate(invs):
				for b in invs[k + 1:]:
					common = self.infl[a.tag] & self.infl[b.tag]
					if common:
						ok = False; self.conflicts.append(Conflict(left=a.name, right=b.name, cells=_cells(common)))
			return self._step(path, z, Rule.CONC_PAIRWISE_DISJOINT, Verdict.SAFE if ok else Verdict.UNKNOWN)
		if isinstance(z, (Par, SeqComp)):
			idx = len(self.steps)
			self.steps.append(None)  # type: ignore[arg-type]  # parent line goes before its children
			left = self.check(z.left, f"{path}.0")
			right = self.check(z.right, f"{path}.1")
			ok = left is Verdict.SAFE and right is Verdict.SAFE
			rule = Rule.SEQCOMP_OF_SAFE
			if isinstance(z, Par):
				rule = Rule.PAR_DISJOINT_INFLUENCE
				linvs, linfl = self._union(f"{path}.0")
				rinvs, rinfl = self._union(f"{path}.1")
				if linfl & rinfl:
					ok = False
					for a in linvs:
						for b in rinvs:
							common = self.infl[a.tag] & self.infl[b.tag]
							if common: self.conflicts.append(Conflict(left=a.name, right=b.name, cells=_cells(common)))
			v = Verdict.SAFE if ok else Verdict.UNKNOWN
			self.steps[idx] = RuleStep(node=path, describe=z.describe(), rule=rule, verdict=v)
			return v
		raise TypeError(f"Not a schedule: {z!r}")


def check_safe(c: WorldState, z: Schedule) -> SafetyReport:
	"""Apply the safe-construction rules bottom-up at `c`.

	A failed rule gives Unknown, never Unsafe: the rules are sufficient, not necessary.
	"""
	po = invocation_po(c, z)
	checker = _DynamicChecker(list(po.elements), influences(po.elements))
	verdict = checker.check(z, ROOT_NODE)
	log.info(f"Check: {verdict.value}, {len(po)} invocations, {len(checker.conflicts)} conflicting pairs")
	return SafetyReport(verdict=verdict, rule_trace=checker.steps, conflicts=checker.conflicts)
