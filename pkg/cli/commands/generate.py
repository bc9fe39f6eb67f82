"""
Generators: gen-fib, gen-nonham
"""

from cli.commands.common import budget_of, emit, read_text
from config.settings import EXIT_CODES
from core.eoltree import from_derivation, level_histogram
from core.generators import (fibonacci_atom, fibonacci_derivation, fibonacci_expected,
                             fibonacci_size, nonham_certificate)
from core.formula import render
from data.errors import BudgetExceeded
from export.factory import FormatFactory
from export.report_text import export_occurrence_table
from utils.helpers import status


def register(subparsers):
    parser = subparsers.add_parser('gen-fib', help='generate the Fibonacci derivation Pi_n')
    parser.add_argument('-n', type=int, required=True)
    parser.add_argument('--intro', action='store_true', help='close with an Intro of A1 -> A_n')
    parser.add_argument('--expect-occ', action='store_true', help='print the occurrence table instead')
    parser.add_argument('--budget', type=int)
    parser.add_argument('--out')
    parser.set_defaults(handler=cmd_gen_fib)

    parser = subparsers.add_parser('gen-nonham', help='generate a non-Hamiltonicity certificate')
    parser.add_argument('--graph', required=True)
    parser.add_argument('--budget', type=int)
    parser.add_argument('--out')
    parser.set_defaults(handler=cmd_gen_nonham)


def cmd_gen_fib(args) -> int:
    n = args.n
    if n < 1:
        raise ValueError(f"-n must be >= 1, got {n}")
    budget = budget_of(args)
    if fibonacci_size(n) > budget:
        raise BudgetExceeded(fibonacci_size(n), budget, f"fib n={n}")

    if not args.expect_occ:
        emit(FormatFactory.dump('proof', fibonacci_derivation(n, with_intro=args.intro)), args.out)
        return EXIT_CODES['ok']

    histogram = level_histogram(from_derivation(fibonacci_derivation(n)))
    rows = []
    for level in range(n):
        label = fibonacci_atom(n - level)
        rows.append((level, render(label), histogram[(level, label)], fibonacci_expected(n, level)))
    emit(export_occurrence_table(rows), args.out)
    mismatches = [row for row in rows if row[2] != row[3]]
    if mismatches:
        status(f"{len(mismatches)} levels break the Fibonacci occurrence law", 'error')
        return EXIT_CODES['rejected']
    status(f"occurrence law holds on all {n} levels", 'ok')
    return EXIT_CODES['ok']


def cmd_gen_nonham(args) -> int:
    graph = FormatFactory.load('graph', read_text(args.graph))
    certificate = nonham_certificate(graph, budget_of(args))
    emit(FormatFactory.dump('proof', certificate), args.out)
    return EXIT_CODES['ok']
