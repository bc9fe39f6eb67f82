"""
Horizontal collapse of EOL-trees into DAG proofs

Nodes at the same level with the same label, rule, child classes and incoming
dependency set are merged. The DAG is verified locally without expansion.
"""

import random
import time
from dataclasses import dataclass, field, replace
from typing import Dict, Iterator, List, Optional, Tuple

from cache.interning import CanonicalCache
from config.settings import BUDGET_CONFIG
from core.eoltree import L, R, U, EDGE_KINDS, EOLTree
from core.formula import Formula, Implication
from data.errors import BudgetExceeded
from data.models import VerifyResult

KINDS = ('leaf', 'intro', 'elim')
ARITY = {'leaf': 0, 'intro': 1, 'elim': 2}


@dataclass(frozen=True)
class DagNode:
    id: int
    level: int
    kind: str                       # 'leaf', 'intro' or 'elim'
    label: Formula
    children: Tuple[int, ...] = ()  # elim: (L, R); intro: (U,)
    mark: Optional[int] = None
    deps: int = 0


@dataclass
class DagProof:
    order: Tuple[Formula, ...]
    nodes: Dict[int, DagNode] = field(default_factory=dict)
    root: int = 0

    def __len__(self) -> int:
        return len(self.nodes)


def compress(t: EOLTree, cache: Optional[CanonicalCache] = None) -> DagProof:
    """
    Merge identical same-level subtrees

    Returns:
        DagProof with ids in preorder of first occurrence (root 0) and Intro
        marks numbered 1, 2, ... in id order
    """
    cache = cache if cache is not None else CanonicalCache()
    classes = [0] * len(t)
    for v in sorted(range(len(t)), key=lambda node: -t.levels[node]):
        kind = t.rule(v)
        child_classes = tuple(classes[child] for _, child in t.children(v))
        classes[v] = cache.intern((t.levels[v], t.labels[v], kind, child_classes, t.deps[v]))

    ids: Dict[int, int] = {}
    representative: List[int] = []
    for v in t.preorder():
        if classes[v] not in ids:
            ids[classes[v]] = len(representative)
            representative.append(v)

    dag = DagProof(t.order, root=0)
    mark = 0
    for dag_id, v in enumerate(representative):
        kind = t.rule(v)
        node_mark = None
        if kind == 'intro':
            mark += 1
            node_mark = mark
        children = tuple(ids[classes[child]] for _, child in t.children(v))
        dag.nodes[dag_id] = DagNode(dag_id, t.levels[v], kind, t.labels[v], children, node_mark, t.deps[v])
    return dag


def expanded_size(d: DagProof) -> int:
    memo: Dict[int, int] = {}
    for node_id in sorted(d.nodes, key=lambda i: -d.nodes[i].level):
        memo[node_id] = 1 + sum(memo[c] for c in d.nodes[node_id].children)
    return memo[d.root]


def expand(d: DagProof, budget: Optional[int] = None) -> EOLTree:
    """
    Unfold a verified DAG into its tree

    Raises:
        BudgetExceeded: the unfolded tree is larger than the budget
    """
    budget = BUDGET_CONFIG['node_budget'] if budget is None else budget
    required = expanded_size(d)
    if required > budget:
        raise BudgetExceeded(required, budget, 'expansion')

    tree = EOLTree(d.order)
    edge_kinds = {'elim': (L, R), 'intro': (U,), 'leaf': ()}
    stack: List[Tuple[int, int, str]] = [(d.root, -1, U)]
    while stack:
        node_id, parent, kind = stack.pop()
        node = d.nodes[node_id]
        v = tree.add_node(node.label, node.level, node.deps)
        if parent >= 0:
            tree.add_edge(kind, parent, v)
        for edge_kind, child in reversed(list(zip(edge_kinds[node.kind], node.children))):
            stack.append((child, v, edge_kind))
    return tree


def reference_counts(d: DagProof) -> Dict[int, int]:
    """Number of parent references per node (the root has 0)"""
    counts = {node_id: 0 for node_id in d.nodes}
    for node in d.nodes.values():
        for child in node.children:
            counts[child] += 1
    return counts


def ratio(t: EOLTree) -> Tuple[int, int, float]:
    """(tree nodes, dag nodes, tree / dag)"""
    dag_nodes = len(compress(t))
    return len(t), dag_nodes, len(t) / dag_nodes


# =============================================================================
# VERIFICATION
# =============================================================================

def _reject(check: str, node: Optional[int], reason: str) -> VerifyResult:
    return VerifyResult(False, reason, check, node)


def verify(d: DagProof) -> VerifyResult:
    """
    Accept iff d is a well-formed, maximally shared DAG proof

    Checks run in this order and the first failure is reported: ids, acyclicity,
    reachability, levels, labels and bitstring widths, rule shapes with
    dependency coherence, marks, maximal sharing.
    """
    nodes = d.nodes
    width = len(d.order)
    index = {f: k for k, f in enumerate(d.order)}

    if d.root not in nodes:
        return _reject('ids', d.root, f"root {d.root} is not a node")
    for node_id in sorted(nodes):
        node = nodes[node_id]
        if node.id != node_id:
            return _reject('ids', node_id, f"node stored under id {node_id} claims id {node.id}")
        if node.kind not in KINDS:
            return _reject('rule-shape', node_id, f"unknown kind {node.kind!r}")
        for child in node.children:
            if child not in nodes:
                return _reject('ids', node_id, f"child {child} is not a node")

    # iterative three-colour DFS
    state: Dict[int, int] = {}
    for start in sorted(nodes):
        if state.get(start):
            continue
        stack = [(start, iter(nodes[start].children))]
        state[start] = 1
        while stack:
            node_id, children = stack[-1]
            child = next(children, None)
            if child is None:
                state[node_id] = 2
                stack.pop()
            elif state.get(child) == 1:
                return _reject('acyclicity', child, f"cycle through node {child}")
            elif not state.get(child):
                state[child] = 1
                stack.append((child, iter(nodes[child].children)))

    reached = {d.root}
    stack = [d.root]
    while stack:
        for child in nodes[stack.pop()].children:
            if child not in reached:
                reached.add(child)
                stack.append(child)
    for node_id in sorted(nodes):
        if node_id not in reached:
            return _reject('reachability', node_id, "not reachable from the root")

    if nodes[d.root].level != 0:
        return _reject('level', d.root, f"root level {nodes[d.root].level}")
    for node_id in sorted(nodes):
        node = nodes[node_id]
        for child in node.children:
            if nodes[child].level != node.level + 1:
                return _reject('level', child, f"level {nodes[child].level} under level {node.level}")

    for node_id in sorted(nodes):
        node = nodes[node_id]
        if node.label not in index:
            return _reject('label', node_id, f"label {node.label} is not in the order")
        if node.kind == 'intro' and isinstance(node.label, Implication) and node.label.antecedent not in index:
            return _reject('label', node_id, f"discharged {node.label.antecedent} is not in the order")
        if node.deps < 0 or node.deps >> width:
            return _reject('bitstring', node_id, f"dependency mask exceeds {width} bits")

    for node_id in sorted(nodes):
        failure = _check_rule(nodes, nodes[node_id], index)
        if failure:
            return _reject(failure[0], node_id, failure[1])

    expected_mark = 0
    for node_id in sorted(nodes):
        node = nodes[node_id]
        if node.kind == 'intro':
            expected_mark += 1
            if node.mark != expected_mark:
                return _reject('marks', node_id, f"mark {node.mark}, expected {expected_mark}")
        elif node.mark is not None:
            return _reject('marks', node_id, f"{node.kind} node carries mark {node.mark}")

    seen: Dict[tuple, int] = {}
    for node_id in sorted(nodes):
        node = nodes[node_id]
        key = (node.level, node.label, node.kind, node.children, node.deps)
        if key in seen:
            return _reject('maximal-sharing', node_id, f"duplicates node {seen[key]}")
        seen[key] = node_id

    return VerifyResult(True)


def _check_rule(nodes: Dict[int, DagNode], node: DagNode, index) -> Optional[Tuple[str, str]]:
    if len(node.children) != ARITY[node.kind]:
        return 'rule-shape', f"{node.kind} node with {len(node.children)} children"
    if node.kind == 'leaf':
        if node.deps != 1 << index[node.label]:
            return 'dependency', "leaf must depend on its own label only"
        return None
    if node.kind == 'elim':
        minor, major = (nodes[c] for c in node.children)
        if major.label != Implication(minor.label, node.label):
            return 'rule-shape', f"major {major.label} is not {minor.label} -> {node.label}"
        if node.deps != minor.deps | major.deps:
            return 'dependency', "elim set is not the union of its premises"
        return None
    premise = nodes[node.children[0]]
    if not isinstance(node.label, Implication) or node.label.consequent != premise.label:
        return 'rule-shape', f"intro {node.label} over premise {premise.label}"
    if node.deps != premise.deps & ~(1 << index[node.label.antecedent]):
        return 'dependency', "intro set is not the premise set minus the discharged formula"
    return None


def timed_verify(d: DagProof) -> Tuple[VerifyResult, float]:
    """verify() plus its wall time in seconds"""
    start = time.perf_counter()
    result = verify(d)
    return result, time.perf_counter() - start


# =============================================================================
# MUTATIONS
# =============================================================================

def mutations(d: DagProof, rng: Optional[random.Random] = None) -> Iterator[Tuple[str, DagProof]]:
    """
    Single-field mutations of d: label, kind, level, one dependency bit, mark

    Yields (description, mutated copy) in node order, or shuffled when rng is given.
    """
    width = len(d.order)
    plans = []
    for node_id in sorted(d.nodes):
        node = d.nodes[node_id]
        plans.append(('label', node_id, None))
        plans.append(('kind', node_id, None))
        plans.append(('level', node_id, None))
        plans.extend(('bit', node_id, k) for k in range(width))
        if node.mark is not None:
            plans.append(('mark', node_id, None))
    if rng is not None:
        rng.shuffle(plans)

    for field_name, node_id, bit in plans:
        node = d.nodes[node_id]
        if field_name == 'label':
            position = d.order.index(node.label)
            changed = replace(node, label=d.order[(position + 1) % width])
        elif field_name == 'kind':
            changed = replace(node, kind=KINDS[(KINDS.index(node.kind) + 1) % len(KINDS)])
        elif field_name == 'level':
            changed = replace(node, level=node.level + 1)
        elif field_name == 'bit':
            changed = replace(node, deps=node.deps ^ (1 << bit))
        else:
            changed = replace(node, mark=node.mark + 1)
        if changed == node:
            continue
        mutated = DagProof(d.order, dict(d.nodes), d.root)
        mutated.nodes[node_id] = changed
        yield f"{field_name} of node {node_id}" + ('' if bit is None else f" bit {bit}"), mutated
