"""
EOL-tree text format

    eol 1
    order A, B, A -> B
    node <id> <level> <label>
    edge <L|R|U> <parent> <child> <bits>

The root edge comes from the root point and is written "edge U * <root> <bits>".
"""

from typing import List, Sequence

from config.settings import FORMAT_CONFIG
from core.eoltree import EDGE_KINDS, EOLTree, bitstring
from core.formula import Formula, parse, render
from data.errors import FormatError, FormulaSyntaxError
from utils.helpers import bits_to_mask, split_order_line


def render_order(order: Sequence[Formula]) -> str:
    return 'order ' + FORMAT_CONFIG['order_separator'].join(render(f) for f in order)


def parse_order(line: str) -> List[Formula]:
    try:
        return [parse(part) for part in split_order_line(line)]
    except FormulaSyntaxError as e:
        raise FormatError(f"bad order line: {e}") from None


def export_eol(t: EOLTree) -> str:
    lines = [FORMAT_CONFIG['eol_header'], render_order(t.order)]
    for v in range(len(t)):
        lines.append(f"node {v} {t.levels[v]} {render(t.labels[v])}")
    lines.append(f"edge U {FORMAT_CONFIG['root_point']} {t.root} {bitstring(t, t.root)}")
    for v in t.preorder():
        for kind, child in t.children(v):
            lines.append(f"edge {kind} {v} {child} {bitstring(t, child)}")
    return '\n'.join(lines) + '\n'


def import_eol(text: str) -> EOLTree:
    """
    Parse the EOL text format

    Raises:
        FormatError: malformed header, lines, ids or bitstrings
    """
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if len(lines) < 2 or lines[0] != FORMAT_CONFIG['eol_header']:
        raise FormatError(f"missing '{FORMAT_CONFIG['eol_header']}' header")
    if not lines[1].startswith('order'):
        raise FormatError("missing order line")
    tree = EOLTree(tuple(parse_order(lines[1])))
    width = len(tree.order)
    root_seen = False

    for number, line in enumerate(lines[2:], start=3):
        parts = line.split(maxsplit=3)
        try:
            if parts[0] == 'node':
                node_id, level = int(parts[1]), int(parts[2])
                if node_id != len(tree):
                    raise FormatError(f"line {number}: node ids must be 0..N-1 in order")
                tree.add_node(parse(parts[3]), level)
            elif parts[0] == 'edge':
                kind, parent, child, bits = line.split()[1:]
                if kind not in EDGE_KINDS:
                    raise FormatError(f"line {number}: unknown edge kind {kind}")
                if len(bits) != width:
                    raise FormatError(f"line {number}: bitstring length {len(bits)} != {width}")
                child_id = int(child)
                if not 0 <= child_id < len(tree):
                    raise FormatError(f"line {number}: unknown node {child_id}")
                tree.deps[child_id] = bits_to_mask(bits)
                if parent == FORMAT_CONFIG['root_point']:
                    tree.root = child_id
                    root_seen = True
                else:
                    parent_id = int(parent)
                    if not 0 <= parent_id < len(tree):
                        raise FormatError(f"line {number}: unknown node {parent_id}")
                    tree.add_edge(kind, parent_id, child_id)
            else:
                raise FormatError(f"line {number}: unknown record {parts[0]!r}")
        except (IndexError, ValueError, FormulaSyntaxError) as e:
            raise FormatError(f"line {number}: {e or 'malformed'}") from None

    if not root_seen:
        raise FormatError("missing root edge")
    for out in tree.edges:
        out.sort(key=lambda edge: EDGE_KINDS.index(edge[0]))
    return tree
