"""
verify <dag>
"""

from cli.commands.common import emit, read_text
from config.settings import EXIT_CODES
from core.compress import verify
from export.factory import FormatFactory


def register(subparsers):
    parser = subparsers.add_parser('verify', help='verify a DAG proof without expanding it')
    parser.add_argument('dag')
    parser.add_argument('--out')
    parser.set_defaults(handler=cmd_verify)


def cmd_verify(args) -> int:
    result = verify(FormatFactory.load('dag', read_text(args.dag)))
    if result:
        emit("accepted\n", args.out)
        return EXIT_CODES['ok']
    emit(f"rejected ({result.check}) at node {result.node}: {result.reason}\n", args.out)
    return EXIT_CODES['rejected']
