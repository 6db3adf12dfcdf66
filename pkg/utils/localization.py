# --- English (en) ---
MSG_CHECK_VERDICT = "verdict: {verdict}"
MSG_CHECK_CONFLICTS = "conflicts:"
MSG_CHECK_NO_CONFLICTS = "conflicts: none"
MSG_CHECK_SAFE_NONDET = "Safe schedule produced {n} distinct outcomes: analyzer bug."
MSG_CONFLICT_LINE = "({cell}) touched by {left} and {right}"
MSG_DET_HEADER = "determinism: {state} ({n} outcome(s) over {lins} linearization(s))"
MSG_DET_SKIPPED = "determinism: skipped ({err})"
MSG_WITNESS_HEADER = "witness:"
MSG_WITNESS_LIN = "  {which}: {order}"
MSG_WITNESS_STATE = "    -> {state}"
MSG_CATEGORY_HEADER = "== {name}: {system} [{verdict}]"
MSG_CATEGORY_FAIL = "Category '{name}' did not match its expected listing."
MSG_FUZZ_SUMMARY = (
	"fuzz: instances={instances} seed={seed} max_invocations={max_invocations}\n"
	"  safe-deterministic:        {safe_det}\n"
	"  unknown-deterministic:     {unknown_det}\n"
	"  unknown-nondeterministic:  {unknown_nondet}\n"
	"  skipped:                   {skipped}\n"
	"  safe-nondeterministic:     {safe_nondet}\n"
	"  parallel divergences:      {divergences}\n"
	"  label declaration misses:  {label_misses}"
)
MSG_FUZZ_VIOLATION = "VIOLATION {detail}"
MSG_ERROR_GENERAL = "Unexpected error: {err}"
MSG_ERROR_KERNEL = "Error: {err}"
