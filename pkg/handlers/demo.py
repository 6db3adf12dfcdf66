import argparse,itertools,logging
from typing import List
from config import settings
from scenarios import get_scenario,scenario_names
from scheduling.schedule import Schedule
from runtime.parallel import RunConfig,TraceEntry,run_parallel
from world.state import WorldState
from utils import constants as c
from utils.helpers import non_negative,positive

log=logging.getLogger(__name__)

def demo_cmd(args: argparse.Namespace)->int:
	"""Prints one state line per frame and the final state marked END."""
	scn=get_scenario(args.scenario)
	traces: List[List[TraceEntry]]=[]
	if args.interpreter==c.INTERPRETER_PARALLEL:
		frame=itertools.count()
		def step(st: WorldState, z: Schedule)->WorldState:
			cfg=RunConfig(workers=args.workers,seed=args.seed+next(frame),trace=args.trace)
			final,trace=run_parallel(st,z,cfg)
			if trace is not None: traces.append(trace)
			return final
		lines=scn.run(args.frames,step)
	else: lines=scn.run(args.frames)
	for ln in lines: print(ln)
	for i,trace in enumerate(traces):
		print(f"trace frame {i+1}:")
		for t in trace: print(f"  {t.render()}")
	log.info(f"Demo '{scn.name}' ({args.interpreter}) done: {len(lines)} lines")
	return c.EXIT_OK

def register_demo_handlers(sub)->None:
	p=sub.add_parser(c.CMD_DEMO,help="Run a scenario frame by frame and print every state.")
	p.add_argument("scenario",choices=scenario_names())
	p.add_argument("--frames",type=non_negative,default=None,help="Frames to run (default: the scenario's own).")
	p.add_argument("--interpreter",choices=c.INTERPRETERS,default=c.INTERPRETER_REF)
	p.add_argument("--workers",type=positive,default=settings.default_workers)
	p.add_argument("--seed",type=int,default=settings.default_seed)
	p.add_argument("--trace",action="store_true",help="With the parallel interpreter, list applied invocations per frame.")
	p.set_defaults(handler=demo_cmd)
	log.debug("Registered demo handler.")
