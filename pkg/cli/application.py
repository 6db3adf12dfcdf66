import argparse
import logging
from handlers import register_all_handlers

log=logging.getLogger(__name__)

def create_parser()->argparse.ArgumentParser:
	"""Builds the argument parser with one subcommand per handler module."""
	log.debug("Creating parser...")
	parser=argparse.ArgumentParser(prog="coreecs",description="Core ECS kernel: demos, safety checks and the determinism fuzzer.")
	sub=parser.add_subparsers(dest="command",required=True,metavar="COMMAND")
	register_all_handlers(sub)
	return parser
