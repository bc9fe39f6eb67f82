"""
EOL-trees: edge-ordered labelled binary trees built from derivations

Node ids are preorder positions, root 0 is the conclusion at level 0. Edges are
kept per parent as (kind, child) pairs with kind L (minor), R (major) or U (Intro
premise). Every node stores the dependency set of its incoming edge as an int mask
over `order`: bit k is set iff order[k] is in the set. The root's incoming edge
comes from the extra root point and carries the open assumptions of the proof.
"""

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

from cache.interning import CanonicalCache
from core.deduction import Derivation, Elim, Hypothesis, Intro, formulas
from core.formula import Formula, Implication, render, subformula_closure
from data.errors import OrderIncomplete
from data.models import Occurrence, Violation
from utils.helpers import mask_to_bits

L, R, U = 'L', 'R', 'U'
EDGE_KINDS = (L, R, U)
NO_NODE = -1


# =============================================================================
# TREE
# =============================================================================

@dataclass
class EOLTree:
    order: Tuple[Formula, ...]
    labels: List[Formula] = field(default_factory=list)
    levels: List[int] = field(default_factory=list)
    deps: List[int] = field(default_factory=list)
    edges: List[List[Tuple[str, int]]] = field(default_factory=list)
    root: int = 0

    def __len__(self) -> int:
        return len(self.labels)

    def add_node(self, label: Formula, level: int, deps: int = 0) -> int:
        self.labels.append(label)
        self.levels.append(level)
        self.deps.append(deps)
        self.edges.append([])
        return len(self.labels) - 1

    def add_edge(self, kind: str, parent: int, child: int):
        self.edges[parent].append((kind, child))

    def child(self, v: int, kind: str) -> int:
        for edge_kind, child in self.edges[v]:
            if edge_kind == kind:
                return child
        return NO_NODE

    def children(self, v: int) -> List[Tuple[str, int]]:
        return self.edges[v]

    def is_leaf(self, v: int) -> bool:
        return not self.edges[v]

    def rule(self, v: int) -> str:
        """'leaf', 'intro' or 'elim' from the outgoing edges"""
        kinds = {kind for kind, _ in self.edges[v]}
        if not kinds:
            return 'leaf'
        return 'intro' if kinds == {U} else 'elim'

    def order_index(self) -> Dict[Formula, int]:
        return {f: k for k, f in enumerate(self.order)}

    def preorder(self, v: Optional[int] = None) -> Iterator[int]:
        stack = [self.root if v is None else v]
        while stack:
            node = stack.pop()
            yield node
            for _, child in reversed(self.edges[node]):
                stack.append(child)

    def parents(self) -> List[int]:
        result = [NO_NODE] * len(self)
        for parent, out in enumerate(self.edges):
            for _, child in out:
                result[child] = parent
        return result

    def height(self) -> int:
        return max(self.levels) - self.levels[self.root] if self.levels else 0

    def measures(self) -> Tuple[int, int]:
        """(node count, edge height)"""
        return len(self), self.height()


# =============================================================================
# CONSTRUCTION
# =============================================================================

def canonical_order(d: Derivation) -> Tuple[Formula, ...]:
    """Sub-formula closure of every formula in d, atoms first"""
    return tuple(subformula_closure(formulas(d)))


def from_derivation(d: Derivation, order: Optional[Sequence[Formula]] = None) -> EOLTree:
    """
    Build the EOL-tree of a checked derivation

    Args:
        d: derivation (check() must pass)
        order: linear order of formulas for the bitstrings; canonical when omitted

    Returns:
        EOLTree with dependency masks on every edge

    Raises:
        OrderIncomplete: a formula of d, or a discharged antecedent, is missing from order
    """
    order = canonical_order(d) if order is None else tuple(order)
    index = {f: k for k, f in enumerate(order)}
    tree = EOLTree(order)
    rules: List[Derivation] = []
    stack: List[Tuple[Derivation, int, str, int]] = [(d, NO_NODE, U, 0)]
    while stack:
        node, parent, kind, level = stack.pop()
        v = tree.add_node(node.conclusion, level)
        rules.append(node)
        if parent != NO_NODE:
            tree.add_edge(kind, parent, v)
        if isinstance(node, Elim):
            stack.append((node.major, v, R, level + 1))
            stack.append((node.minor, v, L, level + 1))
        elif isinstance(node, Intro):
            stack.append((node.premise, v, U, level + 1))

    # a vacuous discharge names an antecedent that labels no node
    needed = set(tree.labels) | {node.conclusion.antecedent for node in rules if isinstance(node, Intro)}
    missing = sorted((f for f in needed if f not in index), key=render)
    if missing:
        raise OrderIncomplete([render(f) for f in missing])

    # children come after their parent in preorder
    for v in range(len(tree) - 1, -1, -1):
        node = rules[v]
        if isinstance(node, Hypothesis):
            tree.deps[v] = 1 << index[node.formula]
        elif isinstance(node, Elim):
            tree.deps[v] = tree.deps[tree.child(v, L)] | tree.deps[tree.child(v, R)]
        else:
            discharged = 1 << index[node.conclusion.antecedent]
            tree.deps[v] = tree.deps[tree.child(v, U)] & ~discharged

    # edge lists in L, R order regardless of push order
    for out in tree.edges:
        out.sort(key=lambda edge: EDGE_KINDS.index(edge[0]))
    return tree


def bitstring(t: EOLTree, v: int) -> str:
    """Dependency bitstring of the edge entering v, order[0] leftmost"""
    return mask_to_bits(t.deps[v], len(t.order))


def root_bitstring(t: EOLTree) -> str:
    return bitstring(t, t.root)


def dependency_set(t: EOLTree, v: int) -> List[Formula]:
    return [f for k, f in enumerate(t.order) if (t.deps[v] >> k) & 1]


def subtree_size(t: EOLTree) -> int:
    return len(t)


def height(t: EOLTree) -> int:
    return t.height()


def label_set(t: EOLTree) -> Set[Formula]:
    """B(t)"""
    return set(t.labels)


# =============================================================================
# VALIDATION
# =============================================================================

def validate(t: EOLTree) -> List[Violation]:
    """
    Check the EOL-tree conditions plus level, bitstring and dependency coherence

    Returns:
        Violations in node order; empty iff t is well formed
    """
    violations: List[Violation] = []
    count = len(t)
    index = t.order_index()
    width = len(t.order)

    def flag(condition, node, message):
        violations.append(Violation(str(condition), node, message))

    # 1: a tree rooted at t.root with at most two children per node
    incoming = [0] * count
    for parent, out in enumerate(t.edges):
        for kind, child in out:
            if not 0 <= child < count:
                flag(1, parent, f"edge to missing node {child}")
                continue
            incoming[child] += 1
    for v in range(count):
        expected = 0 if v == t.root else 1
        if incoming[v] != expected:
            flag(1, v, f"{incoming[v]} incoming edges, expected {expected}")
        if len(t.edges[v]) > 2:
            flag(1, v, f"{len(t.edges[v])} children")

    reached = set()
    stack = [t.root] if 0 <= t.root < count else []
    while stack:
        v = stack.pop()
        if v in reached:
            continue
        reached.add(v)
        stack.extend(child for _, child in t.edges[v] if 0 <= child < count)
    for v in range(count):
        if v not in reached:
            flag(1, v, "not reachable from the root")

    for v in range(count):
        label = t.labels[v]
        out = t.edges[v]
        kinds = [kind for kind, _ in out]

        # 2: labels from B
        if label not in index:
            flag(2, v, f"label {label} is not in the order")

        # 3: disjoint edge sets
        targets = [child for _, child in out]
        if len(set(targets)) != len(targets):
            flag(3, v, "the same child under two edge kinds")
        if any(kind not in EDGE_KINDS for kind in kinds):
            flag(3, v, f"unknown edge kind in {kinds}")

        # 4, 5, 7: at most one edge of each kind
        if kinds.count(R) > 1:
            flag(4, v, "more than one R-child")
        if kinds.count(L) > 1:
            flag(5, v, "more than one L-child")
        if kinds.count(U) > 1:
            flag(7, v, "more than one U-child")

        # 6: L iff R
        if (L in kinds) != (R in kinds):
            flag(6, v, "L-child without R-child" if L in kinds else "R-child without L-child")
        if U in kinds and (L in kinds or R in kinds):
            flag(1, v, "unary and binary edges at one node")

        # 8: l(R) = l(L) -> l(v)
        left, right = t.child(v, L), t.child(v, R)
        if left != NO_NODE and right != NO_NODE and left < count and right < count:
            if t.labels[right] != Implication(t.labels[left], label):
                flag(8, v, f"R-label {t.labels[right]} is not {t.labels[left]} -> {label}")

        # 9: l(v) = q -> l(U-child)
        up = t.child(v, U)
        if up != NO_NODE and up < count:
            if not isinstance(label, Implication) or label.consequent != t.labels[up]:
                flag(9, v, f"U-child label {t.labels[up]} is not the consequent of {label}")
            elif label.antecedent not in index:
                flag(2, v, f"discharged {label.antecedent} is not in the order")

        # levels
        if v == t.root and t.levels[v] != 0:
            flag('level', v, f"root level {t.levels[v]}")
        for _, child in out:
            if 0 <= child < count and t.levels[child] != t.levels[v] + 1:
                flag('level', child, f"level {t.levels[child]} under level {t.levels[v]}")

        # bitstrings
        if t.deps[v] < 0 or t.deps[v] >> width:
            flag('bitstring', v, f"dependency mask exceeds {width} bits")

    if violations:
        return violations

    for v in range(count):
        expected = _expected_deps(t, v, index)
        if expected is not None and expected != t.deps[v]:
            flag('dependency', v, f"edge set {bitstring(t, v)} should be {mask_to_bits(expected, width)}")
    return violations


def _expected_deps(t: EOLTree, v: int, index: Dict[Formula, int]) -> Optional[int]:
    rule = t.rule(v)
    if rule == 'leaf':
        return 1 << index[t.labels[v]]
    if rule == 'elim':
        return t.deps[t.child(v, L)] | t.deps[t.child(v, R)]
    label = t.labels[v]
    return t.deps[t.child(v, U)] & ~(1 << index[label.antecedent])


# =============================================================================
# COUNTING
# =============================================================================

def nodes_at(t: EOLTree, i: int, q: Formula) -> Set[int]:
    """V_t^{i,q}"""
    return {v for v in range(len(t)) if t.levels[v] == i and t.labels[v] == q}


def occ(t: EOLTree, i: int, q: Formula) -> int:
    return len(nodes_at(t, i, q))


def level_histogram(t: EOLTree) -> Counter:
    """Counter keyed by (level, label)"""
    return Counter(zip(t.levels, t.labels))


def histogram_rows(histogram: Counter) -> Dict[int, Dict[Formula, int]]:
    rows: Dict[int, Dict[Formula, int]] = {}
    for (level, label), count in histogram.items():
        rows.setdefault(level, {})[label] = count
    return rows


def label2_suc(t: EOLTree, q: Formula) -> Set[Tuple[Formula, Formula]]:
    """(minor label, major label) pairs under q-labelled binary nodes"""
    pairs = set()
    for v in range(len(t)):
        if t.labels[v] != q:
            continue
        left, right = t.child(v, L), t.child(v, R)
        if left != NO_NODE and right != NO_NODE:
            pairs.add((t.labels[left], t.labels[right]))
    return pairs


# =============================================================================
# SKELETAL TREES
# =============================================================================

@dataclass(frozen=True)
class SkeletalTree:
    """Labelled pattern tree with L/R/U edges and no bitstrings"""
    label: Formula
    children: Tuple[Tuple[str, 'SkeletalTree'], ...] = ()

    @classmethod
    def from_subtree(cls, t: EOLTree, v: int, depth: Optional[int] = None) -> 'SkeletalTree':
        """The subtree of t at v, cut below depth when given"""
        if depth == 0 or t.is_leaf(v):
            return cls(t.labels[v])
        below = None if depth is None else depth - 1
        return cls(t.labels[v], tuple((kind, cls.from_subtree(t, child, below))
                                      for kind, child in t.children(v)))

    def child(self, kind: str) -> Optional['SkeletalTree']:
        return next((sub for k, sub in self.children if k == kind), None)

    def nodes(self) -> List['SkeletalTree']:
        """Preorder"""
        result = [self]
        for _, sub in self.children:
            result.extend(sub.nodes())
        return result

    def size(self) -> int:
        return 1 + sum(sub.size() for _, sub in self.children)

    def height(self) -> int:
        return 1 + max(sub.height() for _, sub in self.children) if self.children else 0

    def measures(self) -> Tuple[int, int]:
        return self.size(), self.height()

    def canonical(self) -> str:
        if not self.children:
            return f"[{render(self.label)}]"
        inner = ' '.join(f"{kind}{sub.canonical()}" for kind, sub in self.children)
        return f"[{render(self.label)} {inner}]"


def structure_classes(t: EOLTree, cache: Optional[CanonicalCache] = None) -> List[int]:
    """Class id per node; equal ids iff the full subtrees are equal up to bitstrings"""
    cache = cache if cache is not None else CanonicalCache()
    classes = [0] * len(t)
    for v in sorted(range(len(t)), key=lambda node: -t.levels[node]):
        key = (t.labels[v], tuple((kind, classes[child]) for kind, child in t.edges[v]))
        classes[v] = cache.intern(key)
    return classes


def _embedding(s: SkeletalTree, t: EOLTree, v: int) -> Optional[Tuple[int, ...]]:
    mapping = []
    stack = [(s, v)]
    while stack:
        pattern, node = stack.pop()
        mapping.append(node)
        for kind, sub in reversed(pattern.children):
            stack.append((sub, t.child(node, kind)))
    return tuple(mapping)


def skeletal_match(s: SkeletalTree, t: EOLTree, classes: Optional[List[int]] = None) -> List[Occurrence]:
    """
    All occurrences of s in t

    Embeddings are unique per root because every node has at most one child per
    edge kind; the embedding test is memoized per (pattern node, subtree class).
    """
    classes = classes if classes is not None else structure_classes(t)
    memo: Dict[Tuple[int, int], bool] = {}

    def embeds(pattern: SkeletalTree, node: int) -> bool:
        key = (id(pattern), classes[node])
        if key in memo:
            return memo[key]
        result = t.labels[node] == pattern.label
        if result:
            for kind, sub in pattern.children:
                child = t.child(node, kind)
                if child == NO_NODE or not embeds(sub, child):
                    result = False
                    break
        memo[key] = result
        return result

    return [Occurrence(v, t.levels[v], _embedding(s, t, v))
            for v in range(len(t)) if embeds(s, v)]


def skeletal_match_bruteforce(s: SkeletalTree, t: EOLTree) -> List[Occurrence]:
    """Naive matcher, used as a test oracle"""

    def embeds(pattern: SkeletalTree, node: int) -> bool:
        if t.labels[node] != pattern.label:
            return False
        for kind, sub in pattern.children:
            candidates = [child for k, child in t.children(node) if k == kind]
            if not any(embeds(sub, child) for child in candidates):
                return False
        return True

    return [Occurrence(v, t.levels[v], _embedding(s, t, v))
            for v in range(len(t)) if embeds(s, v)]


def occurrence_tree(t: EOLTree, occurrence: Occurrence, s: SkeletalTree) -> EOLTree:
    """The nodes of one occurrence as a stand-alone EOL-tree (levels relative)"""
    result = EOLTree(t.order)
    base = t.levels[occurrence.root]
    position = {}
    for node in occurrence.mapping:
        position[node] = result.add_node(t.labels[node], t.levels[node] - base, t.deps[node])
    stack = [(s, occurrence.root)]
    while stack:
        pattern, node = stack.pop()
        for kind, sub in pattern.children:
            child = t.child(node, kind)
            result.add_edge(kind, position[node], position[child])
            stack.append((sub, child))
    for out in result.edges:
        out.sort(key=lambda edge: EDGE_KINDS.index(edge[0]))
    return result
