from .demo import register_demo_handlers
from .check import register_check_handlers
from .categories import register_categories_handlers
from .fuzz import register_fuzz_handlers

def register_all_handlers(sub)->None:
	"""Registers every subcommand on the parser's subparsers action."""
	register_demo_handlers(sub)
	register_check_handlers(sub)
	register_categories_handlers(sub)
	register_fuzz_handlers(sub)
