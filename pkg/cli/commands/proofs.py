"""
Proof commands: check, normalize, export-eol, analyze, compress
"""

from cli.commands.common import budget_of, emit, load_proof, read_text, resolve_order
from core.compress import compress
from core.deduction import check, normalize, size
from core.eoltree import from_derivation
from core.formula import formula_key, render
from core.redundancy import analyze
from data.errors import BudgetExceeded
from export.factory import FormatFactory
from export.report_text import export_report


def register(subparsers):
    parser = subparsers.add_parser('check', help='check rule shapes and greedy discharges')
    parser.add_argument('proof')
    parser.add_argument('--out')
    parser.set_defaults(handler=cmd_check)

    parser = subparsers.add_parser('normalize', help='normalize a proof')
    parser.add_argument('proof')
    parser.add_argument('--out')
    parser.set_defaults(handler=cmd_normalize)

    parser = subparsers.add_parser('export-eol', help='write the EOL-tree of a proof')
    parser.add_argument('proof')
    parser.add_argument('--order', help="'canonical' or a file with an order line")
    parser.add_argument('--budget', type=int)
    parser.add_argument('--out')
    parser.set_defaults(handler=cmd_export_eol)

    parser = subparsers.add_parser('analyze', help='report repeated subtrees')
    parser.add_argument('proof')
    parser.add_argument('--threshold', type=int)
    parser.add_argument('--all-levels', action='store_true')
    parser.add_argument('--order')
    parser.add_argument('--budget', type=int)
    parser.add_argument('--out')
    parser.set_defaults(handler=cmd_analyze)

    parser = subparsers.add_parser('compress', help='collapse a proof into a DAG')
    parser.add_argument('proof')
    parser.add_argument('--order')
    parser.add_argument('--budget', type=int)
    parser.add_argument('--out')
    parser.set_defaults(handler=cmd_compress)


def _tree(args):
    d = load_proof(args.proof)
    budget = budget_of(args)
    required = size(d)
    if required > budget:
        raise BudgetExceeded(required, budget, 'tree')
    return from_derivation(d, resolve_order(d, args.order))


def cmd_check(args) -> int:
    judgment = check(FormatFactory.load('proof', read_text(args.proof)))
    counts = judgment.open_assumptions
    assumptions = ', '.join(render(f) if counts[f] == 1 else f"{render(f)} ({counts[f]})"
                            for f in sorted(counts, key=formula_key))
    prefix = f"{assumptions} " if assumptions else ''
    emit(f"{prefix}|- {render(judgment.conclusion)}\n", args.out)
    return 0


def cmd_normalize(args) -> int:
    emit(FormatFactory.dump('proof', normalize(load_proof(args.proof))), args.out)
    return 0


def cmd_export_eol(args) -> int:
    emit(FormatFactory.dump('eol', _tree(args)), args.out)
    return 0


def cmd_analyze(args) -> int:
    tree = _tree(args)
    report = analyze(tree, args.threshold, all_levels=args.all_levels)
    emit(export_report(report, tree), args.out)
    return 0


def cmd_compress(args) -> int:
    emit(FormatFactory.dump('dag', compress(_tree(args))), args.out)
    return 0
