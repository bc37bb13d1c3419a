"""
Single entry point over the toolkit's management commands.

    python -m apps.cli special-pair --images "x1, e, x2, e" --target-rank 2 --n 2

Subcommand names use hyphens; they map onto the management commands of the
same name with underscores. Exit status: 0 success, 1 verdict failure,
2 usage error, 3 resource cap.
"""
from importlib import import_module
from typing import List, Optional, TextIO
import logging
import sys

from django.core.management import get_commands

from utils.exceptions import EXIT_OK, EXIT_USAGE_ERROR

logger = logging.getLogger(__name__)

PROGRAM = 'concordia'

SUBCOMMANDS = (
    'fox',
    'member',
    'pairs',
    'axes',
    'special-pair',
    'verify-cert',
    'alex',
    'ltsig',
    'rho',
    'arf',
    'plan',
)


def command_name(subcommand: str) -> str:
    return subcommand.replace('-', '_')


def usage() -> str:
    return f"usage: {PROGRAM} {{{','.join(SUBCOMMANDS)}}} [options]\n"


def run(argv: List[str], stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    """
    Run one subcommand and return its exit status.

    Argument errors surface as status 2 from argparse; CommandError carries
    the status chosen by the command.
    """
    stderr = stderr or sys.stderr
    if not argv or argv[0] not in SUBCOMMANDS:
        stderr.write(usage())
        return EXIT_USAGE_ERROR

    name = command_name(argv[0])
    app = get_commands()[name]
    command = import_module(f"{app}.management.commands.{name}").Command(stdout=stdout, stderr=stderr)
    logger.debug(f"Dispatching {argv[0]}", extra={'subcommand': argv[0], 'app': app})
    try:
        command.run_from_argv([PROGRAM, name, *argv[1:]])
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else EXIT_USAGE_ERROR
        logger.info(f"{argv[0]} exited with {code}", extra={'subcommand': argv[0], 'exit_code': code})
        return code
    return EXIT_OK
