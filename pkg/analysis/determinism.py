import logging
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from scheduling.invocations import invocation_po
from scheduling.linearize import Linearization, apply_linearization, canonical_linearization, enumerate_linearizations
from scheduling.schedule import Schedule
from utils import localization as lang
from world.fresh import FreshPlan
from world.render import render_state
from world.state import WorldState, canonicalize

log = logging.getLogger(__name__)


class Outcome(BaseModel):
	"""One final state with the linearization that first produced it."""
	model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

	order: Tuple[str, ...]
	state: WorldState

	@classmethod
	def of(cls, lin: Linearization, state: WorldState) -> "Outcome":
		return cls(order=tuple(inv.name for inv in lin), state=state)

	def render(self, which: str) -> List[str]:
		order = " ".join(self.order) or "(empty)"
		return [lang.MSG_WITNESS_LIN.format(which=which, order=order), lang.MSG_WITNESS_STATE.format(state=render_state(self.state))]


class DeterminismVerdict(BaseModel):
	model_config = ConfigDict(frozen=True)

	deterministic: bool
	distinct_outcomes: int
	linearizations: int
	witness: Optional[Tuple[Outcome, Outcome]] = None

	def render(self) -> str:
		state = "deterministic" if self.deterministic else "non-deterministic"
		out = [lang.MSG_DET_HEADER.format(state=state, n=self.distinct_outcomes, lins=self.linearizations)]
		if self.witness:
			out.append(lang.MSG_WITNESS_HEADER)
			out += self.witness[0].render("first") + self.witness[1].render("second")
		return "\n".join(out)


def brute_force_determinism(c: WorldState, z: Schedule, limit: Optional[int] = None) -> DeterminismVerdict:
	"""Apply every linearization of the invocation order and bucket the outcomes.

	Fresh ids are fixed per invocation by the canonical order and replayed in
	the others, and outcomes are compared in canonical form.

	Raises:
		TooManyLinearizations: The order has more than `limit` linearizations.
	"""
	po = invocation_po(c, z)
	lins = enumerate_linearizations(po, limit)
	plan = FreshPlan()
	apply_linearization(c, canonical_linearization(po), fresh_plan=plan)
	buckets: Dict[str, Outcome] = {}
	for lin in lins:
		final = apply_linearization(c, lin, fresh_plan=plan)
		key = render_state(canonicalize(final, fresh_base=c.next_fresh))
		if key not in buckets: buckets[key] = Outcome.of(lin, final)
	outcomes = list(buckets.values())
	witness = (outcomes[0], outcomes[1]) if len(outcomes) > 1 else None
	log.info(f"Brute force: {len(lins)} linearizations, {len(outcomes)} outcome(s)")
	return DeterminismVerdict(deterministic=len(outcomes) == 1, distinct_outcomes=len(outcomes), linearizations=len(lins), witness=witness)
