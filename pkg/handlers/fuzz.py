import argparse,logging
from config import settings
from scenarios.fuzz import convergence_instance,fuzz
from utils import constants as c
from utils.helpers import non_negative,positive

log=logging.getLogger(__name__)

def fuzz_cmd(args: argparse.Namespace)->int:
	"""Prints outcome counts; fails on any Safe schedule that is not deterministic."""
	extra=[convergence_instance(args.instances)] if args.with_convergence else None
	summary=fuzz(args.instances,args.max_invocations,args.seed,extra)
	print(summary.render())
	return c.EXIT_OK if summary.ok else c.EXIT_FAILURE

def register_fuzz_handlers(sub)->None:
	p=sub.add_parser(c.CMD_FUZZ,help="Random worlds and schedules checked against brute force.")
	p.add_argument("--instances",type=non_negative,default=200)
	p.add_argument("--max-invocations",type=positive,default=8)
	p.add_argument("--seed",type=int,default=settings.default_seed)
	p.add_argument("--with-convergence",action="store_true",help="Also evaluate the lost-write schedule.")
	p.set_defaults(handler=fuzz_cmd)
	log.debug("Registered fuzz handler.")
