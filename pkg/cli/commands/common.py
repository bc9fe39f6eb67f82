"""
Shared plumbing for command handlers: file IO, budgets, orders
"""

from pathlib import Path
from typing import Optional, Tuple

from config.settings import BUDGET_CONFIG
from core.deduction import Derivation, check
from core.eoltree import canonical_order
from core.formula import Formula
from data.errors import FormatError
from export.eol_text import parse_order
from export.factory import FormatFactory


def read_text(path: str) -> str:
    return Path(path).read_text(encoding='utf-8')


def emit(text: str, out: Optional[str] = None):
    """Write to --out when given, else stdout"""
    if out:
        Path(out).write_text(text, encoding='utf-8')
    else:
        print(text, end='' if text.endswith('\n') else '\n')


def budget_of(args) -> int:
    value = getattr(args, 'budget', None)
    return BUDGET_CONFIG['node_budget'] if value is None else value


def load_proof(path: str) -> Derivation:
    """Parse and check a proof file; raises on syntax or rule errors"""
    d = FormatFactory.load('proof', read_text(path))
    check(d)
    return d


def resolve_order(d: Derivation, source: Optional[str]) -> Tuple[Formula, ...]:
    """--order canonical (default) or a file holding an order line"""
    if source is None or source == 'canonical':
        return canonical_order(d)
    lines = read_text(source).strip().splitlines()
    if not lines:
        raise FormatError(f"{source}: empty order file")
    return tuple(parse_order(lines[0]))
