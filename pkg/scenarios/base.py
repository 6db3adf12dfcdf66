import logging
from dataclasses import dataclass, field
from typing import AbstractSet, Callable, List, Mapping, Optional, Tuple

from scheduling.interpreter import apply_schedule
from scheduling.schedule import Schedule
from utils.constants import END_SUFFIX
from world.render import render_state
from world.state import WorldState

log = logging.getLogger(__name__)

Step = Callable[[WorldState, Schedule], WorldState]


@dataclass(frozen=True)
class Scenario:
	"""A start state, the schedule run once per frame, and what each system may write."""
	name: str
	start: WorldState
	schedule: Schedule
	declared: Mapping[str, AbstractSet[str]] = field(default_factory=dict)
	frames: int = 1
	summary: str = ""
	expected: Tuple[str, ...] = ()

	def run(self, frames: Optional[int] = None, step: Step = apply_schedule) -> List[str]:
		"""Rendered state before every frame, then the final one marked END."""
		frames = self.frames if frames is None else frames
		lines: List[str] = []
		c = self.start
		for i in range(frames):
			lines.append(render_state(c))
			c = step(c, self.schedule)
			log.debug(f"Scn '{self.name}' frame {i + 1} done")
		lines.append(render_state(c) + END_SUFFIX)
		return lines
