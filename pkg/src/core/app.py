"""Application entry wiring for the spinbrauer CLI."""

import logging
import sys

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib
from argparse import ArgumentParser
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import List, Optional

from dotenv import load_dotenv

from src.core.commands import (
    ANALYSES,
    SYMFUNC_TABLES,
    cmd_analyze,
    cmd_eval,
    cmd_symfunc,
    cmd_verify,
)
from src.symfunc import BASES
from src.utils.colors import Colors
from src.utils.constants import DEFAULT_LOG_FILE, EXIT_ASSERTION, EXIT_OK, EXIT_USAGE


def setup_logging(log_file: Path = DEFAULT_LOG_FILE) -> None:
    """
    Configure logging to file (with rotation) and console.

    Args:
        log_file: Path to log file.
    """
    root_logger = logging.getLogger()
    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)

    root_logger.setLevel(logging.DEBUG)

    log_file.parent.mkdir(parents=True, exist_ok=True)
    file_handler = RotatingFileHandler(
        log_file, encoding="utf-8", maxBytes=10 * 1024 * 1024, backupCount=5
    )
    file_handler.setLevel(logging.DEBUG)
    file_formatter = logging.Formatter(
        "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
    )
    file_handler.setFormatter(file_formatter)

    console_handler = logging.StreamHandler(sys.stdout)
    console_handler.setLevel(logging.INFO)
    console_handler.setFormatter(logging.Formatter("%(message)s"))

    class ConsoleFilter(logging.Filter):
        def filter(self, record: logging.LogRecord) -> bool:
            return record.name in ("Core", "SuiteRunner") and record.levelno >= logging.INFO

    console_handler.addFilter(ConsoleFilter())

    root_logger.addHandler(file_handler)
    root_logger.addHandler(console_handler)


def get_version() -> str:
    """
    Get version from pyproject.toml.

    Returns:
        str: Version string from pyproject.toml.
    """
    pyproject_path = Path(__file__).parents[2] / "pyproject.toml"
    try:
        with open(pyproject_path, "rb") as f:
            return tomllib.load(f)["project"]["version"]
    except (OSError, KeyError, tomllib.TOMLDecodeError):
        return "0.1.0"


def _common_parser() -> ArgumentParser:
    common = ArgumentParser(add_help=False)
    common.add_argument("--N", help="dimension range of V, e.g. 2..5", default=None)
    common.add_argument("--epsilon", help="+1, -1 or both (odd N only)", default=None)
    common.add_argument("--jobs", type=int, help="worker processes", default=None)
    common.add_argument("--cache", help="matrix cache directory", default=None)
    common.add_argument("--out", help="write the JSON report to this file", default=None)
    common.add_argument(
        "--config",
        help="YAML run preset (overrides SPINBRAUER_CONFIG)",
        default=None,
    )
    return common


def build_parser() -> ArgumentParser:
    """The argument parser with its four subcommands."""
    common = _common_parser()
    parser = ArgumentParser(
        prog="spinbrauer",
        description="Spinbrauer - exact checks for the spin Brauer category",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {get_version()}")
    commands = parser.add_subparsers(dest="command", required=True)

    verify = commands.add_parser("verify", parents=[common], help="relation suites")
    verify.add_argument("--affine", action="store_true", default=None, help="dot relations")
    verify.add_argument("--modules", default=None, help="module words, e.g. empty,V,S")
    verify.add_argument("--perturb-D", dest="perturb_D", type=int, default=None)
    verify.add_argument("--slow", action="store_true", default=None, help="include N >= 5 extras")
    verify.add_argument("--plugins", default=None, help="directory of relation plugins")
    verify.set_defaults(handler=cmd_verify)

    evaluate = commands.add_parser("eval", parents=[common], help="evaluate a closed diagram")
    evaluate.add_argument("file", nargs="?", default=None, help="diagram file (.sbd)")
    evaluate.add_argument("-e", dest="expression", default=None, help="inline diagram")
    evaluate.add_argument("--monkey1", type=int, default=None, metavar="R")
    evaluate.add_argument("--monkey2", type=int, default=None, metavar="R")
    evaluate.add_argument("--kappa", type=int, default=None, choices=(1, -1))
    evaluate.add_argument("--budget", type=int, default=None, help="evaluator step budget")
    evaluate.add_argument("--check-N", dest="check_N", default=None, help="specialize at N")
    evaluate.set_defaults(handler=cmd_eval)

    analyze = commands.add_parser("analyze", parents=[common], help="representation analytics")
    analyze.add_argument("what", choices=ANALYSES)
    analyze.add_argument("--word", default=None, help="module word, e.g. SS")
    analyze.add_argument("--r", default=None, help="strand or dot counts, e.g. 0..2")
    analyze.add_argument("--modules", default=None, help="module words, e.g. empty,V")
    analyze.set_defaults(handler=cmd_analyze)

    symfunc = commands.add_parser("symfunc", parents=[common], help="W_r tables")
    symfunc.add_argument("what", choices=SYMFUNC_TABLES)
    symfunc.add_argument("--r", default=None, help="degrees, e.g. 1..3")
    symfunc.add_argument("--max-r", dest="max_r", type=int, default=None)
    symfunc.add_argument("--basis", default=None, choices=BASES)
    symfunc.set_defaults(handler=cmd_symfunc)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    Entry point for CLI execution.

    Returns:
        int: 0 on success, 1 when a checked identity fails, 2 on usage or input
        errors, 3 when the evaluator runs out of budget.
    """
    load_dotenv()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    setup_logging()
    logging.getLogger(__name__).debug(f"spinbrauer {get_version()}: {args}")

    try:
        return args.handler(args)
    except KeyboardInterrupt:
        print(f"\n{Colors.GREEN}OK{Colors.RESET} {Colors.WHITE}Exiting cleanly...{Colors.RESET}\n")
        logging.info("Interrupted by user. Exiting cleanly...")
        return EXIT_OK
    except Exception as e:
        logging.critical(f"Fatal Error: {e}", exc_info=True)
        print(f"\n{Colors.RED}ERR {e}{Colors.RESET}\n")
        return EXIT_ASSERTION
