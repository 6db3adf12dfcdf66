import logging
import sys
from typing import List, Optional

import networkx
import pydantic

from config import settings
from cli.application import create_parser
from cli.error_handler import handle_error

logging.basicConfig(
    format="%(asctime)s - %(name)s[%(levelname)s] - %(message)s",
    level=getattr(logging, settings.log_level, logging.INFO),
)
log = logging.getLogger(__name__)


def main(argv: Optional[List[str]] = None) -> int:
    parser = create_parser()
    args = parser.parse_args(argv)
    log.info(f"Starting '{args.command}'...")
    log.debug(
        f"Python:{sys.version.split()[0]}, "
        f"networkx:{networkx.__version__}, "
        f"pydantic:{pydantic.VERSION}"
    )
    try:
        code = args.handler(args)
    except KeyboardInterrupt:
        log.info("Interrupted.")
        return 130
    except Exception as e:
        return handle_error(e)
    log.info(f"'{args.command}' finished, exit {code}.")
    return code


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
