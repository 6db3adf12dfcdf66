import argparse,logging
from analysis.safety import check_safe
from scenarios import category_scenarios
from utils import localization as lang,constants as c

log=logging.getLogger(__name__)

def categories_cmd(args: argparse.Namespace)->int:
	"""Runs every mutation-category row for one frame and checks it against its listing."""
	failed=0
	for scn in category_scenarios():
		verdict=check_safe(scn.start,scn.schedule).verdict
		print(lang.MSG_CATEGORY_HEADER.format(name=scn.name,system=scn.summary,verdict=verdict.value))
		lines=scn.run()
		for ln in lines: print(ln)
		if scn.expected and tuple(lines)!=scn.expected:
			failed+=1; log.error(lang.MSG_CATEGORY_FAIL.format(name=scn.name))
	log.info(f"Categories: {failed} mismatch(es)")
	return c.EXIT_FAILURE if failed else c.EXIT_OK

def register_categories_handlers(sub)->None:
	p=sub.add_parser(c.CMD_CATEGORIES,help="Run the mutation-category suite.")
	p.set_defaults(handler=categories_cmd)
	log.debug("Registered categories handler.")
