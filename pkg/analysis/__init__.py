from .influence import influences, invocation_influence, schedule_influence
from .safety import Conflict, Rule, RuleStep, SafetyReport, Verdict, check_safe
from .static import check_static, check_static_disjoint_labels, check_static_singleton, declared_for
from .determinism import DeterminismVerdict, Outcome, brute_force_determinism
