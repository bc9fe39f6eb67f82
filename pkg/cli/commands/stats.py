"""
stats fib|nonham <from> <to>
"""

from cli.commands.common import budget_of, emit
from core.generators import family_stats
from export.factory import FormatFactory
from export.report_text import stats_summary
from utils.helpers import parse_range, status


def register(subparsers):
    parser = subparsers.add_parser('stats', help='growth table of a proof family (CSV)')
    parser.add_argument('family', choices=['fib', 'nonham'])
    parser.add_argument('start')
    parser.add_argument('stop')
    parser.add_argument('--budget', type=int)
    parser.add_argument('--out')
    parser.set_defaults(handler=cmd_stats)


def cmd_stats(args) -> int:
    ns = parse_range(args.start, args.stop)
    stats = family_stats(args.family, ns, budget_of(args))
    emit(FormatFactory.dump('stats', stats), args.out)
    for line in stats_summary(stats):
        status(line, 'ok')
    return 0
