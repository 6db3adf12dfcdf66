from utils.constants import BARE_INT_LABEL, MAPSTO, STORE_SEP
from world.schema import ComponentValue, EntityId
from world.state import WorldState

def render_value(v: ComponentValue) -> str:
	p = v.payload
	if isinstance(p, EntityId): return f"{v.label} {p}"
	if p == (): return v.label
	if v.label == BARE_INT_LABEL: return str(p)
	return f"{v.label} ({p})" if p < 0 else f"{v.label} {p}"

def render_state(c: WorldState) -> str:
	"""One line per state: each store in schema order, then the fresh counter."""
	parts = []
	for label in c.schema.labels:
		cells = ", ".join(f"{e} {MAPSTO} {render_value(v)}" for e, v in sorted(c.store(label).items()))
		parts.append(f"{label}{MAPSTO}{{{cells}}}")
	parts.append(f"Metadata {{nextFresh = {c.next_fresh}}}")
	return STORE_SEP.join(parts)
