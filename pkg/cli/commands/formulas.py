"""
parse <formula>
"""

from cli.commands.common import emit
from core.formula import parse, render, size, syntax_tree, tree_measures


def register(subparsers):
    parser = subparsers.add_parser('parse', help='parse and re-render a formula')
    parser.add_argument('formula')
    parser.add_argument('--out')
    parser.set_defaults(handler=cmd_parse)


def cmd_parse(args) -> int:
    f = parse(args.formula)
    _, height = tree_measures(syntax_tree(f))
    emit(f"{render(f)}\nsize {size(f)} height {height}\n", args.out)
    return 0
