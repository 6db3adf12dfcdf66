import logging,sys
from utils import localization as lang,constants as c
from utils.errors import EcsError

log=logging.getLogger(__name__)
class ErrorHandlerError(Exception): pass # Specific exception

def handle_error(err: BaseException)->int:
	"""Central error handler: logs, tells the user, maps to an exit code."""
	if isinstance(err, ErrorHandlerError):
		log.critical("Recursive err in handler!"); return c.EXIT_FAILURE
	try:
		if isinstance(err,(EcsError,AssertionError)):
			log.error(f"Command failed: {err}",exc_info=err)
			print(lang.MSG_ERROR_KERNEL.format(err=err),file=sys.stderr)
		else:
			log.critical(f"Unhandled: {err}",exc_info=err)
			print(lang.MSG_ERROR_GENERAL.format(err=err),file=sys.stderr)
	except Exception as e:
		raise ErrorHandlerError(str(e)) from e
	return c.EXIT_FAILURE
