from .grammar import (And, Anyway, ComponentSlot, Excl, Incl, OptionalSlot, PairSlot, Query, QueryVector,
	Shape, UnitSlot, conforms, conforms_all, result_shape)
from .engine import EntityMatch, eval_query, eval_query_vector, lookup_match
