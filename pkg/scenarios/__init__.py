from typing import Callable, Dict, List

from .base import Scenario
from .physics import converge, manual, semi_auto, toy_physics
from .disjoint import disjoint_entities
from .categories import CATEGORIES, category_scenario, category_scenarios

SCENARIOS: Dict[str, Callable[[], Scenario]] = {
	"toy-phys": toy_physics,
	"disjoint-entities": disjoint_entities,
	"converge": converge,
	"manual": manual,
	"semi-auto": semi_auto,
}
for _cat in CATEGORIES: SCENARIOS[_cat.name] = (lambda c=_cat: category_scenario(c))


def scenario_names() -> List[str]: return list(SCENARIOS)


def get_scenario(name: str) -> Scenario:
	"""Raises KeyError for unknown names."""
	return SCENARIOS[name]()
