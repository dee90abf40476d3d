"""Distinct adjacent pairs in random words over a geometric alphabet."""

from ._pairwords import *  # noqa: F401,F403
from ._pairwords import __doc__  # noqa: F401


def cli(*args):
    """Run the command-line tool in-process; returns (exit_code, stdout, stderr)."""
    return run_cli(["pairwords", *map(str, args)])
