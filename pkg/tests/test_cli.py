import pytest

from cli.application import create_parser
from cli.error_handler import handle_error
from main import main
from scenarios.categories import CATEGORIES
from scenarios.disjoint import DISJOINT_EXPECTED
from scenarios.physics import TOY_EXPECTED
from utils.constants import EXIT_USAGE
from utils.errors import SchemaError


def run_cli(capsys, *argv):
	code = main(list(argv))
	out = capsys.readouterr()
	return code, out.out.splitlines(), out.err


# --- demo ---

def test_demo_toy_prints_goldens(capsys):
	code, lines, _ = run_cli(capsys, "demo", "toy-phys")
	assert code == 0
	assert lines == list(TOY_EXPECTED)


def test_demo_disjoint_prints_goldens(capsys):
	code, lines, _ = run_cli(capsys, "demo", "disjoint-entities")
	assert code == 0 and lines == list(DISJOINT_EXPECTED)


def test_demo_zero_frames(capsys):
	code, lines, _ = run_cli(capsys, "demo", "toy-phys", "--frames", "0")
	assert code == 0 and lines == [TOY_EXPECTED[0] + " END"]


@pytest.mark.parametrize("workers", ["1", "4"])
def test_demo_parallel_matches_goldens(capsys, workers):
	code, lines, _ = run_cli(capsys, "demo", "toy-phys", "--interpreter", "parallel", "--workers", workers, "--seed", "5")
	assert code == 0 and lines == list(TOY_EXPECTED)


def test_demo_parallel_trace(capsys):
	code, lines, _ = run_cli(capsys, "demo", "toy-phys", "--interpreter", "parallel", "--workers", "1", "--trace")
	assert code == 0
	assert lines[:3] == list(TOY_EXPECTED)
	assert lines[3:7] == ["trace frame 1:", "  0: inertia#0 applied", "  1: inertia#1 applied", "  2: collide#2 applied"]
	assert lines[7] == "trace frame 2:"


@pytest.mark.parametrize("argv", [
	["demo", "no-such-scenario"],
	["demo", "toy-phys", "--frames", "-1"],
	["demo", "toy-phys", "--workers", "0"],
	["demo", "toy-phys", "--interpreter", "gpu"],
	[],
])
def test_usage_errors_exit_2(argv):
	with pytest.raises(SystemExit) as err:
		main(argv)
	assert err.value.code == EXIT_USAGE


# --- check ---

def test_check_toy(capsys):
	code, lines, _ = run_cli(capsys, "check", "toy-phys")
	assert code == 0
	assert lines == [
		"scenario: toy-phys (Conc inertia ⨟ Seq collide)",
		"z ⨟ [SeqCompOfSafe] Safe",
		"  z.0 Conc inertia [ConcPairwiseDisjoint] Safe",
		"  z.1 Seq collide [SeqAlwaysSafe] Safe",
		"verdict: Safe",
		"conflicts: none",
		"static: Safe",
	]


def test_check_converge_with_brute_force(capsys):
	code, lines, _ = run_cli(capsys, "check", "converge", "--brute")
	assert code == 0
	assert "verdict: Unknown" in lines
	assert "  (e1, Vel) touched by collide#2 and collide#3" in lines
	assert "static: Unknown" in lines
	assert "determinism: non-deterministic (2 outcome(s) over 4 linearization(s))" in lines
	assert "witness:" in lines


def test_check_disjoint_static_is_weaker(capsys):
	code, lines, _ = run_cli(capsys, "check", "disjoint-entities", "--brute")
	assert code == 0
	assert "verdict: Safe" in lines and "static: Unknown" in lines
	assert lines[-1].startswith("determinism: deterministic")


def test_check_brute_force_over_limit(capsys):
	code, lines, _ = run_cli(capsys, "check", "converge", "--brute", "--limit", "2")
	assert code == 0
	assert lines[-1] == "determinism: skipped (At least 3 linearizations (limit 2))"


# --- categories ---

def test_categories_all_match(capsys):
	code, lines, _ = run_cli(capsys, "categories")
	assert code == 0
	headers = [ln for ln in lines if ln.startswith("== ")]
	assert [h.split(":")[0][3:] for h in headers] == [cat.name for cat in CATEGORIES]
	assert all(h.endswith("[Safe]") for h in headers)
	for cat in CATEGORIES:
		assert cat.expected[-1] in lines


# --- fuzz ---

def test_fuzz_no_instances(capsys):
	code, lines, _ = run_cli(capsys, "fuzz", "--instances", "0")
	assert code == 0
	assert lines[0] == "fuzz: instances=0 seed=0 max_invocations=8"
	assert not any(ln.startswith("VIOLATION") for ln in lines)


def test_fuzz_small_run_with_convergence(capsys):
	code, lines, _ = run_cli(capsys, "fuzz", "--instances", "20", "--seed", "3", "--with-convergence")
	assert code == 0
	counts = {k.strip(): int(v) for k, v in (ln.split(":") for ln in lines[1:])}
	assert counts["safe-nondeterministic"] == 0
	assert counts["unknown-nondeterministic"] >= 1
	assert counts["parallel divergences"] == 0 and counts["label declaration misses"] == 0


# --- plumbing ---

def test_parser_lists_every_command():
	parser = create_parser()
	for cmd in ("demo", "check", "categories", "fuzz"):
		assert parser.parse_args([cmd] + (["toy-phys"] if cmd in ("demo", "check") else [])).command == cmd


def test_kernel_error_exit_code(capsys):
	assert handle_error(SchemaError("unknown label 'Rot'")) == 1
	assert "Error: unknown label 'Rot'" in capsys.readouterr().err


def test_unexpected_error_exit_code(capsys):
	assert handle_error(RuntimeError("disk on fire")) == 1
	assert "Unexpected error: disk on fire" in capsys.readouterr().err
