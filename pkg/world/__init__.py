from .schema import UNIT, ComponentKind, ComponentValue, EntityId, Schema
from .mutation import NIL, Attach, Compose, Detach, Fresh, Mutation, Nil, attach, compose, fresh, spawn
from .fresh import FreshPlan, FreshSource, RecordingFresh, ReplayFresh
from .state import (WorldState, apply_mutation, canonicalize, empty_state, fresh_entity,
	live_entities, new_state, states_equal_upto_fresh)
from .influence import Cell, Influence, format_cell, mutation_influence
from .render import render_state, render_value
