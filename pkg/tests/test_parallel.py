import pytest
from pydantic import ValidationError

from analysis import brute_force_determinism, check_safe
from config import settings
from queries import Incl
from scenarios import get_scenario
from scenarios.disjoint import disjoint_entities
from scenarios.fuzz import generate_instances
from scenarios.physics import POS, TOY_EXPECTED, toy_physics
from runtime import RunConfig, run_parallel
from scheduling import Conc, Seq, apply_schedule, invocation_po
from systems import system
from utils.errors import ParallelRuntimeError
from world import EntityId, live_entities, render_state, states_equal_upto_fresh

WORKERS = (1, 2, 4, 8)


def parallel_step(workers, seed):
	return lambda c, z: run_parallel(c, z, RunConfig(workers=workers, seed=seed))[0]


@pytest.mark.parametrize("workers", WORKERS)
@pytest.mark.parametrize("make", [toy_physics, disjoint_entities])
def test_safe_scenarios_match_reference_for_every_seed(make, workers):
	scn = make()
	reference = apply_schedule(scn.start, scn.schedule)
	for seed in range(100):
		final, _ = run_parallel(scn.start, scn.schedule, RunConfig(workers=workers, seed=seed))
		assert states_equal_upto_fresh(final, reference, fresh_base=scn.start.next_fresh), seed


@pytest.fixture(scope="module")
def safe_fuzz_instances():
	"""Safe instances of the seed-42 fuzz batch within the 8-invocation budget."""
	return [inst for inst in generate_instances(200, 42)
		if len(invocation_po(inst.start, inst.schedule)) <= 8 and check_safe(inst.start, inst.schedule).safe]


@pytest.mark.parametrize("workers", WORKERS)
def test_safe_fuzz_instances_match_reference_for_every_seed(safe_fuzz_instances, workers):
	assert safe_fuzz_instances
	for inst in safe_fuzz_instances:
		reference = apply_schedule(inst.start, inst.schedule)
		for seed in range(100):
			final, _ = run_parallel(inst.start, inst.schedule, RunConfig(workers=workers, seed=seed))
			assert states_equal_upto_fresh(final, reference, fresh_base=inst.start.next_fresh), (inst.index, seed)


@pytest.mark.parametrize("workers", WORKERS)
def test_toy_frames_render_goldens(workers):
	assert toy_physics().run(step=parallel_step(workers, 7)) == list(TOY_EXPECTED)


@pytest.mark.parametrize("name", ["toy-phys", "converge", "semi-auto", "owned-initialize"])
def test_one_worker_is_the_reference_interpreter(name):
	scn = get_scenario(name)
	final, _ = run_parallel(scn.start, scn.schedule, RunConfig(workers=1))
	assert final == apply_schedule(scn.start, scn.schedule)


def test_lost_write_outcomes_are_linearizations(start, lost_write_schedule):
	outcomes = [o.state for o in brute_force_determinism(start, lost_write_schedule).witness]
	for seed in range(40):
		final, _ = run_parallel(start, lost_write_schedule, RunConfig(workers=8, seed=seed))
		assert any(states_equal_upto_fresh(final, o, fresh_base=start.next_fresh) for o in outcomes), seed


@pytest.mark.parametrize("workers", (1, 4))
def test_trace_respects_invocation_order(start, toy_schedule, workers):
	po = invocation_po(start, toy_schedule)
	_, trace = run_parallel(start, toy_schedule, RunConfig(workers=workers, seed=3, trace=True))
	assert len(trace) == len(po)
	assert [t.step for t in trace] == list(range(len(po)))
	step_of = {(t.node, t.entities): t.step for t in trace}
	steps = {inv.tag: step_of[(inv.node, inv.match.entities)] for inv in po}
	assert all(steps[a] <= steps[b] for a, b in po.order)


def test_trace_off_by_default(start, toy_schedule):
	_, trace = run_parallel(start, toy_schedule, RunConfig(workers=2))
	assert trace is None


def test_trace_render(start, toy_schedule):
	_, trace = run_parallel(start, toy_schedule, RunConfig(workers=1, trace=True))
	assert [t.render() for t in trace] == ["0: inertia#0 applied", "1: inertia#1 applied", "2: collide#2 applied"]


@system("explode", Incl(POS))
def explode(m):
	raise ValueError(f"boom at {m.entity}")


@system("not-a-mutation", Incl(POS))
def not_a_mutation(m):
	return 42


@pytest.mark.parametrize("workers", (1, 4))
@pytest.mark.parametrize("s", [explode, not_a_mutation])
def test_failing_invocation_raises(start, workers, s):
	with pytest.raises(ParallelRuntimeError):
		run_parallel(start, Conc(s), RunConfig(workers=workers))
	with pytest.raises(ParallelRuntimeError):
		run_parallel(start, Conc(s) | Seq(s), RunConfig(workers=workers))


def test_fresh_ids_stay_unique_under_threads():
	scn = get_scenario("owned-initialize")
	for seed in range(20):
		final, _ = run_parallel(scn.start, scn.schedule, RunConfig(workers=8, seed=seed))
		assert final.next_fresh == EntityId(6)
		assert len(final.store(POS)) == 5
		assert live_entities(final) == {EntityId(i) for i in range(6)}
		assert render_state(final) == scn.expected[1][:-len(" END")]


def test_input_state_untouched(start, lost_write_schedule):
	before = render_state(start)
	run_parallel(start, lost_write_schedule, RunConfig(workers=4))
	assert render_state(start) == before


def test_run_config_validation():
	with pytest.raises(ValidationError):
		RunConfig(workers=0)
	cfg = RunConfig()
	assert cfg.workers == settings.default_workers and cfg.seed == settings.default_seed and not cfg.trace
