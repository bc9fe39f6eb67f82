"""
DAG proof text format

    dag 1
    order A, B, A -> B
    node <id> <level> leaf "<label>" <bits>
    node <id> <level> intro "<label>" <U> <mark> <bits>
    node <id> <level> elim "<label>" <L> <R> <bits>
    root <id>
"""

import shlex

from config.settings import FORMAT_CONFIG
from core.compress import ARITY, DagNode, DagProof
from core.formula import parse, render
from data.errors import FormatError, FormulaSyntaxError
from export.eol_text import parse_order, render_order
from utils.helpers import bits_to_mask, mask_to_bits


def export_dag(d: DagProof) -> str:
    width = len(d.order)
    lines = [FORMAT_CONFIG['dag_header'], render_order(d.order)]
    for node_id in sorted(d.nodes):
        node = d.nodes[node_id]
        fields = [str(c) for c in node.children]
        if node.kind == 'intro':
            fields.append(str(node.mark))
        middle = ' '.join(fields)
        middle = f" {middle}" if middle else ''
        lines.append(f'node {node.id} {node.level} {node.kind} "{render(node.label)}"{middle} '
                     f'{mask_to_bits(node.deps, width)}')
    lines.append(f"root {d.root}")
    return '\n'.join(lines) + '\n'


def import_dag(text: str) -> DagProof:
    """
    Parse the DAG text format; structure is checked later by verify()

    Raises:
        FormatError: malformed header, records, formulas or bitstrings
    """
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if len(lines) < 2 or lines[0] != FORMAT_CONFIG['dag_header']:
        raise FormatError(f"missing '{FORMAT_CONFIG['dag_header']}' header")
    if not lines[1].startswith('order'):
        raise FormatError("missing order line")
    dag = DagProof(tuple(parse_order(lines[1])))
    width = len(dag.order)
    root = None

    for number, line in enumerate(lines[2:], start=3):
        try:
            parts = shlex.split(line)
            if parts[0] == 'root':
                root = int(parts[1])
            elif parts[0] == 'node':
                node_id, level, kind, label = int(parts[1]), int(parts[2]), parts[3], parse(parts[4])
                if kind not in ARITY:
                    raise FormatError(f"line {number}: unknown kind {kind!r}")
                rest = parts[5:]
                arity = ARITY[kind]
                expected = arity + (1 if kind == 'intro' else 0) + 1
                if len(rest) != expected:
                    raise FormatError(f"line {number}: {kind} node needs {expected} trailing fields")
                children = tuple(int(c) for c in rest[:arity])
                mark = int(rest[arity]) if kind == 'intro' else None
                bits = rest[-1]
                if len(bits) != width:
                    raise FormatError(f"line {number}: bitstring length {len(bits)} != {width}")
                if node_id in dag.nodes:
                    raise FormatError(f"line {number}: duplicate node id {node_id}")
                dag.nodes[node_id] = DagNode(node_id, level, kind, label, children, mark, bits_to_mask(bits))
            else:
                raise FormatError(f"line {number}: unknown record {parts[0]!r}")
        except (IndexError, ValueError, FormulaSyntaxError) as e:
            raise FormatError(f"line {number}: {e or 'malformed'}") from None

    if root is None:
        raise FormatError("missing root line")
    dag.root = root
    return dag
