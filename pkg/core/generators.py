"""
Proof families with huge normal derivations

Fibonacci family:
    Pi_1 = A1, Pi_2 = A1, A1 -> A2 / A2,
    Pi_k = Elim(minor Pi_{k-1}, major Elim(minor Pi_{k-2}, major sigma_k))
    with sigma_k = A_{k-2} -> (A_{k-1} -> A_k). Sub-derivations are shared objects.

Non-Hamiltonicity certificates: normal derivations of q from the implicational
encoding of a directed graph, built by case-splitting on every step of a
candidate path and refuting each completed vertex sequence.
"""

import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from config.settings import BUDGET_CONFIG, ENCODING_CONFIG, ORACLE_CONFIG
from core.deduction import (Derivation, Elim, Hypothesis, Intro, canonicalize, elim,
                            size as derivation_size)
from core.eoltree import EOLTree, from_derivation, label_set, level_histogram
from core.formula import Atom, Formula, Implication, implies
from data.errors import (BudgetExceeded, FibonacciRangeError, GraphFormatError,
                         GraphIsHamiltonian, OracleBudgetExceeded, ValidPathError)
from data.models import FamilyRow, FamilyStats
from utils.helpers import fibonacci, geometric_mean, least_squares_slope, status


# =============================================================================
# FIBONACCI FAMILY
# =============================================================================

def fibonacci_atom(k: int) -> Atom:
    return Atom(f"A{k}")


def fibonacci_derivation(n: int, with_intro: bool = False) -> Derivation:
    """
    Pi_n deriving A_n from A1, A1 -> A2 and sigma_3..sigma_n

    Args:
        n: index, n >= 1
        with_intro: close with an Intro of A1 -> A_n discharging every A1

    Returns:
        Normal derivation; built in O(n) with shared sub-derivations
    """
    if n < 1:
        raise ValueError(f"fibonacci derivation needs n >= 1, got {n}")
    a = [None] + [fibonacci_atom(k) for k in range(1, n + 1)]
    proofs: List[Optional[Derivation]] = [None, Hypothesis(a[1])]
    if n >= 2:
        proofs.append(elim(proofs[1], Hypothesis(Implication(a[1], a[2]))))
    for k in range(3, n + 1):
        sigma = Hypothesis(implies(a[k - 2], a[k - 1], a[k]))
        proofs.append(elim(proofs[k - 1], elim(proofs[k - 2], sigma)))

    result = proofs[n]
    if with_intro:
        result = canonicalize(Intro(Implication(a[1], a[n]), result, 1))
    return result


def fibonacci_expected(n: int, l: int) -> int:
    """occ of A_{n-l} at level l in Pi_n: Fibonacci(l+1)"""
    if not 0 <= l <= n - 1:
        raise FibonacciRangeError(f"level {l} outside 0..{n - 1}")
    return fibonacci(l + 1)


def fibonacci_size(n: int) -> int:
    """Node count of Pi_n without the closing Intro"""
    sizes = [0, 1, 3]
    for k in range(3, n + 1):
        sizes.append(sizes[k - 1] + sizes[k - 2] + 3)
    return sizes[n]


# =============================================================================
# GRAPHS
# =============================================================================

@dataclass(frozen=True)
class Graph:
    """Simple digraph on vertices 1..n"""
    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 1:
            raise GraphFormatError(f"graph needs at least one vertex, got {self.n}")
        edges = frozenset(tuple(edge) for edge in self.edges)
        for u, v in edges:
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise GraphFormatError(f"edge {u} {v} outside 1..{self.n}")
            if u == v:
                raise GraphFormatError(f"self-loop at {u}")
        object.__setattr__(self, 'edges', edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edges

    def successors(self, u: int) -> List[int]:
        return sorted(v for (w, v) in self.edges if w == u)

    def sorted_edges(self) -> List[Tuple[int, int]]:
        return sorted(self.edges)


def all_graphs(n: int) -> Iterable[Graph]:
    """Every simple digraph on n vertices, by edge-subset bitmask"""
    pairs = [(u, v) for u in range(1, n + 1) for v in range(1, n + 1) if u != v]
    for mask in range(1 << len(pairs)):
        yield Graph(n, frozenset(p for k, p in enumerate(pairs) if (mask >> k) & 1))


def hamiltonian_oracle(g: Graph) -> Optional[List[int]]:
    """
    Lexicographically least Hamiltonian path, or None

    Raises:
        OracleBudgetExceeded: more vertices than ORACLE_CONFIG allows
    """
    if g.n > ORACLE_CONFIG['max_vertices']:
        raise OracleBudgetExceeded(f"oracle limited to {ORACLE_CONFIG['max_vertices']} vertices, got {g.n}")
    successors = {u: g.successors(u) for u in range(1, g.n + 1)}
    path: List[int] = []
    used = set()

    def extend(u: int) -> bool:
        path.append(u)
        used.add(u)
        if len(path) == g.n:
            return True
        for v in successors[u]:
            if v not in used and extend(v):
                return True
        path.pop()
        used.discard(u)
        return False

    for start in range(1, g.n + 1):
        if extend(start):
            return list(path)
    return None


# =============================================================================
# ENCODING
# =============================================================================

@dataclass
class EncodingContext:
    """Atoms and implicational hypotheses encoding 'g has no Hamiltonian path'"""
    graph: Graph
    q: Atom
    x: Dict[Tuple[int, int], Atom]
    orx: Dict[int, Atom]
    ora: Dict[int, Atom]
    families: Dict[str, List[Formula]]
    schemata: Dict[int, Formula]

    def step_atom(self, i: int, v: int) -> Atom:
        return self.x[(i, v)]

    @property
    def hypotheses(self) -> List[Formula]:
        """S_G*: every family, the schemata and the step disjunction atoms"""
        result: List[Formula] = []
        for name in sorted(self.families):
            result.extend(self.families[name])
        result.extend(self.schemata[i] for i in sorted(self.schemata))
        result.extend(self.orx[i] for i in sorted(self.orx))
        return result


def encode_hamiltonian(g: Graph) -> EncodingContext:
    n = g.n
    q = Atom(ENCODING_CONFIG['absurdity_atom'])
    x = {(i, v): Atom(ENCODING_CONFIG['step_atom'].format(step=i, vertex=v))
         for i in range(1, n + 1) for v in range(1, n + 1)}
    orx = {i: Atom(ENCODING_CONFIG['step_disjunction_atom'].format(step=i)) for i in range(1, n + 1)}
    ora = {v: Atom(ENCODING_CONFIG['vertex_disjunction_atom'].format(vertex=v)) for v in range(1, n + 1)}
    steps = range(1, n + 1)

    families = {
        # every vertex is visited at some step; unused by the certificate
        'A': [Implication(x[(i, v)], ora[v]) for v in steps for i in steps],
        'B': [implies(x[(i, v)], x[(j, v)], q) for v in steps for i in steps for j in steps if i < j],
        'C': [Implication(x[(i, v)], orx[i]) for i in steps for v in steps],
        'D': [implies(x[(i, v)], x[(i, w)], q) for i in steps for v in steps for w in steps if v != w],
        'E': [implies(x[(i, v)], x[(i + 1, w)], q) for i in range(1, n) for v in steps for w in steps
              if v != w and not g.has_edge(v, w)],
    }
    schemata = {i: implies(*[Implication(x[(i, v)], q) for v in steps], orx[i], q) for i in steps}
    return EncodingContext(g, q, x, orx, ora, families, schemata)


def is_hamiltonian_path(g: Graph, p: Sequence[int]) -> bool:
    return (len(p) == g.n and len(set(p)) == g.n
            and all(g.has_edge(p[j], p[j + 1]) for j in range(len(p) - 1)))


def refute_path(ctx: EncodingContext, p: Sequence[int]) -> Derivation:
    """
    Two-Elim derivation of q from X_{1,p1}, ..., X_{n,pn}

    A repeated vertex (least pair of positions) is refuted before a missing edge
    (least position).

    Raises:
        ValidPathError: p is a Hamiltonian path of the graph
    """
    g = ctx.graph
    if len(p) != g.n:
        raise ValueError(f"sequence length {len(p)} != {g.n}")
    if is_hamiltonian_path(g, p):
        raise ValidPathError(p)

    witness = None
    for i1, i2 in itertools.combinations(range(1, g.n + 1), 2):
        if p[i1 - 1] == p[i2 - 1]:
            witness = (i1, i2)
            break
    if witness is None:
        j = next(j for j in range(1, g.n) if not g.has_edge(p[j - 1], p[j]))
        witness = (j, j + 1)

    i1, i2 = witness
    first, second = ctx.x[(i1, p[i1 - 1])], ctx.x[(i2, p[i2 - 1])]
    rule = Hypothesis(implies(first, second, ctx.q))
    return elim(Hypothesis(second), elim(Hypothesis(first), rule))


# =============================================================================
# CERTIFICATES
# =============================================================================

def certificate_size_estimate(n: int) -> int:
    """Exact node count of the certificate for an n-vertex graph"""
    internal = sum(n ** j for j in range(n))
    return 5 * n ** n + (2 * n + 3) * internal


def nonham_certificate(g: Graph, budget: Optional[int] = None) -> Derivation:
    """
    Normal derivation of q from S_G* for a non-Hamiltonian graph

    Each step k splits on ORX_k: the schema for step k is eliminated against an
    Intro of X_{k,v} -> q for every vertex v, then against ORX_k itself. Completed
    sequences are refuted with refute_path.

    Raises:
        BudgetExceeded: the certificate would exceed the node budget
        GraphIsHamiltonian: the graph has a Hamiltonian path
    """
    budget = BUDGET_CONFIG['node_budget'] if budget is None else budget
    path = hamiltonian_oracle(g)
    if path is not None:
        raise GraphIsHamiltonian(path)

    required = certificate_size_estimate(g.n)
    if required > budget:
        raise BudgetExceeded(required, budget, 'certificate')

    ctx = encode_hamiltonian(g)
    n = g.n

    def split(prefix: Tuple[int, ...]) -> Derivation:
        if len(prefix) == n:
            return refute_path(ctx, prefix)
        k = len(prefix) + 1
        chain: Derivation = Hypothesis(ctx.schemata[k])
        for v in range(1, n + 1):
            case = split(prefix + (v,))
            chain = elim(Intro(Implication(ctx.x[(k, v)], ctx.q), case, 1), chain)
        return elim(Hypothesis(ctx.orx[k]), chain)

    certificate = canonicalize(split(()))
    status(f"certificate for n={n}: {required} nodes")
    return certificate


def split_height(d: Derivation) -> int:
    """
    Height with every maximal chain of major-premise Elims counted as one rule

    This is the height of the certificate read with n-ary case splits.
    """
    memo: Dict[int, int] = {}

    def measure(node: Derivation) -> int:
        key = id(node)
        if key in memo:
            return memo[key]
        if isinstance(node, Hypothesis):
            result = 0
        elif isinstance(node, Intro):
            result = 1 + measure(node.premise)
        else:
            side = []
            top = node
            while isinstance(top, Elim):
                side.append(top.minor)
                top = top.major
            side.append(top)
            result = 1 + max(measure(s) for s in side)
        memo[key] = result
        return result

    return measure(d)


# =============================================================================
# FAMILY STATISTICS
# =============================================================================

def _fib_member(n: int) -> Derivation:
    return fibonacci_derivation(n)


def _nonham_member(n: int, budget: Optional[int] = None) -> Derivation:
    """Certificate for the edgeless graph, non-Hamiltonian for n >= 2"""
    return nonham_certificate(Graph(n), budget)


FAMILIES: Dict[str, Callable[..., Derivation]] = {
    'fib': _fib_member,
    'nonham': _nonham_member,
}


def family_row(n: int, tree: EOLTree, previous: Optional[int] = None) -> FamilyRow:
    histogram = level_histogram(tree)
    nodes = len(tree)
    ratio = nodes / previous if previous else None
    return FamilyRow(n, len(label_set(tree)), nodes, tree.height(), max(histogram.values()), ratio)


def family_stats(family: Union[str, Callable[[int], Derivation]], ns: Iterable[int],
                 budget: Optional[int] = None, tail: int = 5) -> FamilyStats:
    """
    Measure a family over a range of indices

    Args:
        family: 'fib', 'nonham' or a callable n -> Derivation
        ns: indices to build
        budget: node budget per member
        tail: number of trailing per-step ratios averaged into step_ratio

    Returns:
        FamilyStats with rows, the log-linear growth exponent of |V| against |B|
        and the geometric mean of the last per-step ratios

    Raises:
        BudgetExceeded: a member is larger than the budget
    """
    budget = BUDGET_CONFIG['node_budget'] if budget is None else budget
    if isinstance(family, str):
        if family not in FAMILIES:
            raise ValueError(f"Unknown family: {family}")
        name, build = family, FAMILIES[family]
    else:
        name, build = getattr(family, '__name__', 'custom'), family

    rows: List[FamilyRow] = []
    previous = None
    for n in ns:
        if name == 'fib' and fibonacci_size(n) > budget:
            raise BudgetExceeded(fibonacci_size(n), budget, f"fib n={n}")
        d = build(n, budget) if name == 'nonham' else build(n)
        required = derivation_size(d)
        if required > budget:
            raise BudgetExceeded(required, budget, f"{name} n={n}")
        row = family_row(n, from_derivation(d), previous)
        rows.append(row)
        previous = row.nodes
        status(f"{name} n={n}: |B|={row.labels} |V|={row.nodes} h={row.height}")

    ratios = [row.ratio for row in rows if row.ratio]
    exponent = least_squares_slope([row.labels for row in rows], [math.log(row.nodes) for row in rows])
    step_ratio = geometric_mean(ratios[-tail:]) if ratios else None
    return FamilyStats(name, rows, exponent, step_ratio)
