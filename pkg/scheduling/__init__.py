from .schedule import Conc, Par, Schedule, Seq, SeqComp, count_par
from .interpreter import apply_schedule, interpret_schedule
from .invocations import Invocation, InvocationPO, invocation_po
from .linearize import (Linearization, apply_linearization, canonical_linearization, count_linearizations,
	enumerate_linearizations)
