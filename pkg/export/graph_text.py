"""
Graph files: "n m" followed by m lines "u v" (1-indexed, directed u -> v)
"""

from core.generators import Graph
from data.errors import GraphFormatError


def read_graph(text: str) -> Graph:
    lines = [line.split() for line in text.splitlines() if line.strip()]
    if not lines:
        raise GraphFormatError("empty graph file")
    try:
        n, m = (int(x) for x in lines[0])
    except ValueError:
        raise GraphFormatError(f"bad header {' '.join(lines[0])!r}, expected 'n m'") from None
    if len(lines) - 1 != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(lines) - 1}")

    edges = set()
    for number, fields in enumerate(lines[1:], start=2):
        try:
            u, v = (int(x) for x in fields)
        except ValueError:
            raise GraphFormatError(f"line {number}: expected 'u v'") from None
        if (u, v) in edges:
            raise GraphFormatError(f"line {number}: duplicate edge {u} {v}")
        edges.add((u, v))
    return Graph(n, frozenset(edges))


def write_graph(g: Graph) -> str:
    lines = [f"{g.n} {len(g.edges)}"] + [f"{u} {v}" for u, v in g.sorted_edges()]
    return '\n'.join(lines) + '\n'
