"""
Command-line front end: argument parsing, dispatch and exit codes
"""

import argparse
from typing import List, Optional

from cli.commands import COMMAND_GROUPS
from config.settings import APP_CONFIG, EXIT_CODES
from data.errors import (BudgetExceeded, DerivationError, GraphIsHamiltonian, MimpError,
                         OracleBudgetExceeded)
from utils.helpers import status


class UsageError(Exception):
    """Bad command line"""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog=APP_CONFIG['app_name'], description=APP_CONFIG['description'])
    parser.add_argument('--version', action='version', version=APP_CONFIG['version'])
    subparsers = parser.add_subparsers(dest='command', parser_class=_Parser)
    subparsers.required = True
    for group in COMMAND_GROUPS:
        group.register(subparsers)
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """
    Run one command

    Returns:
        0 success, 1 input or usage error, 2 rejected proof or DAG,
        3 graph is Hamiltonian, 4 budget exceeded
    """
    try:
        args = build_parser().parse_args(argv)
        return args.handler(args)
    except UsageError as e:
        status(f"usage: {e}", 'error')
        return EXIT_CODES['input_error']
    except DerivationError as e:
        print(f"rejected: {e}")
        return EXIT_CODES['rejected']
    except GraphIsHamiltonian as e:
        print(f"hamiltonian path: {' '.join(map(str, e.path))}")
        return EXIT_CODES['hamiltonian']
    except (BudgetExceeded, OracleBudgetExceeded) as e:
        status(str(e), 'error')
        return EXIT_CODES['budget']
    except (MimpError, OSError, ValueError) as e:
        status(str(e), 'error')
        return EXIT_CODES['input_error']


def main():
    raise SystemExit(run())
