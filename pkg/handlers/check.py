import argparse,logging
from analysis.determinism import brute_force_determinism
from analysis.safety import check_safe
from analysis.static import check_static
from scenarios import get_scenario,scenario_names
from utils import localization as lang,constants as c
from utils.errors import AnalysisError,TooManyLinearizations
from utils.helpers import positive

log=logging.getLogger(__name__)

def check_cmd(args: argparse.Namespace)->int:
	"""Prints the safety report of a scenario's schedule at its start state."""
	scn=get_scenario(args.scenario); st=scn.start; z=scn.schedule
	print(f"scenario: {scn.name} {z}")
	report=check_safe(st,z)
	print(report.render())
	try: print(f"static: {check_static(st.schema,z,scn.declared).verdict.value}")
	except AnalysisError as e: log.warning(f"Static check skipped: {e}")
	if not args.brute: return c.EXIT_OK
	try: det=brute_force_determinism(st,z,args.limit)
	except TooManyLinearizations as e:
		print(lang.MSG_DET_SKIPPED.format(err=e)); return c.EXIT_OK
	print(det.render())
	if report.safe and not det.deterministic:
		log.error(lang.MSG_CHECK_SAFE_NONDET.format(n=det.distinct_outcomes)); return c.EXIT_FAILURE
	return c.EXIT_OK

def register_check_handlers(sub)->None:
	p=sub.add_parser(c.CMD_CHECK,help="Safety report for a scenario's schedule.")
	p.add_argument("scenario",choices=scenario_names())
	p.add_argument("--brute",action="store_true",help="Also apply every linearization and compare outcomes.")
	p.add_argument("--limit",type=positive,default=None,help="Linearization guard (default from settings).")
	p.set_defaults(handler=check_cmd)
	log.debug("Registered check handler.")
