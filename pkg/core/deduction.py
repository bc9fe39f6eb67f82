"""
Natural-deduction derivations in minimal implicational logic

Derivations are immutable trees of Hypothesis / Intro / Elim nodes. Sub-derivation
objects may be shared in memory (the Fibonacci family relies on it); every
operation treats them as the expanded tree. Nodes are referenced by paths: a tuple
of child indices from the root, Elim 0 = minor, Elim 1 = major, Intro 0 = premise.

Discharging is greedy: a hypothesis labelled A is discharged by the nearest Intro
below it whose antecedent is A.
"""

from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple, Union

from core.formula import Formula, Implication, Atom, implies, subformula_closure
from data.errors import DanglingMark, IllFormedRule, NonGreedyDischarge
from data.models import Judgment

Path = Tuple[int, ...]


# =============================================================================
# NODES
# =============================================================================

@dataclass(frozen=True)
class Hypothesis:
    formula: Formula
    mark: Optional[int] = None

    @property
    def conclusion(self) -> Formula:
        return self.formula

    def children(self) -> Tuple:
        return ()


@dataclass(frozen=True)
class Intro:
    conclusion: Formula
    premise: 'Derivation'
    mark: int

    def children(self) -> Tuple['Derivation', ...]:
        return (self.premise,)


@dataclass(frozen=True)
class Elim:
    conclusion: Formula
    minor: 'Derivation'
    major: 'Derivation'

    def children(self) -> Tuple['Derivation', ...]:
        return (self.minor, self.major)


Derivation = Union[Hypothesis, Intro, Elim]


class _NoEPart:
    """Signature of a branch without Elim steps"""

    def __repr__(self) -> str:
        return 'NO_E_PART'


NO_E_PART = _NoEPart()


@dataclass(frozen=True)
class Branch:
    """β_1..β_k with split = number of Elim steps (index of the minimal formula)"""
    nodes: Tuple[Path, ...]
    formulas: Tuple[Formula, ...]
    split: int

    @property
    def e_part(self) -> Tuple[Formula, ...]:
        return self.formulas[:self.split + 1] if self.split else ()

    @property
    def i_part(self) -> Tuple[Formula, ...]:
        return self.formulas[self.split:]

    @property
    def minimal_formula(self) -> Formula:
        return self.formulas[self.split]


# =============================================================================
# CONSTRUCTORS
# =============================================================================

def hyp(formula: Formula, mark: Optional[int] = None) -> Hypothesis:
    return Hypothesis(formula, mark)


def elim(minor: Derivation, major: Derivation) -> Elim:
    """Modus ponens; the conclusion is read off the major premise"""
    major_formula = major.conclusion
    if not isinstance(major_formula, Implication) or major_formula.antecedent != minor.conclusion:
        raise IllFormedRule((), f"major {major_formula} does not match minor {minor.conclusion}")
    return Elim(major_formula.consequent, minor, major)


def intro(antecedent: Formula, premise: Derivation, mark: int = 1) -> Intro:
    """⊃-Intro; marks are assigned properly by canonicalize()"""
    return Intro(Implication(antecedent, premise.conclusion), premise, mark)


# =============================================================================
# TRAVERSAL
# =============================================================================

def walk(d: Derivation) -> Iterator[Tuple[Path, Derivation]]:
    """Preorder over the expanded tree (minor before major)"""
    stack = [((), d)]
    while stack:
        path, node = stack.pop()
        yield path, node
        children = node.children()
        for index in range(len(children) - 1, -1, -1):
            stack.append((path + (index,), children[index]))


def node_at(d: Derivation, path: Path) -> Derivation:
    node = d
    for index in path:
        node = node.children()[index]
    return node


def replace_at(d: Derivation, path: Path, new: Derivation) -> Derivation:
    if not path:
        return new
    head, rest = path[0], path[1:]
    if isinstance(d, Intro):
        return Intro(d.conclusion, replace_at(d.premise, rest, new), d.mark)
    if isinstance(d, Elim):
        if head == 0:
            return Elim(d.conclusion, replace_at(d.minor, rest, new), d.major)
        return Elim(d.conclusion, d.minor, replace_at(d.major, rest, new))
    raise IndexError(f"no child {head} under a hypothesis")


def conclusion(d: Derivation) -> Formula:
    return d.conclusion


def size(d: Derivation) -> int:
    """Number of formula occurrences of the expanded tree"""
    memo: Dict[int, int] = {}

    def count(node) -> int:
        key = id(node)
        if key not in memo:
            memo[key] = 1 + sum(count(child) for child in node.children())
        return memo[key]

    return count(d)


def height(d: Derivation) -> int:
    """Edge length of the longest root-to-leaf path"""
    memo: Dict[int, int] = {}

    def measure(node) -> int:
        key = id(node)
        if key not in memo:
            children = node.children()
            memo[key] = 1 + max(measure(child) for child in children) if children else 0
        return memo[key]

    return measure(d)


def formulas(d: Derivation) -> set:
    """Distinct formulas occurring in d"""
    seen_nodes = set()
    found = set()
    stack = [d]
    while stack:
        node = stack.pop()
        if id(node) in seen_nodes:
            continue
        seen_nodes.add(id(node))
        found.add(node.conclusion)
        stack.extend(node.children())
    return found


# =============================================================================
# CHECKING
# =============================================================================

def check(d: Derivation) -> Judgment:
    """
    Check rule shapes and greedy discharging

    Returns:
        Judgment with the conclusion and the multiset of open assumptions

    Raises:
        IllFormedRule, DanglingMark, NonGreedyDischarge
    """
    open_assumptions: Counter = Counter()
    seen_marks: Dict[int, Path] = {}
    # active Intros on the current root path: (antecedent, mark)
    active: List[Tuple[Formula, int]] = []
    stack: List[Tuple[Path, Derivation, bool]] = [((), d, False)]

    while stack:
        path, node, leaving = stack.pop()
        if leaving:
            active.pop()
            continue

        if isinstance(node, Hypothesis):
            _check_hypothesis(path, node, active, open_assumptions)
        elif isinstance(node, Intro):
            formula = node.conclusion
            if not isinstance(formula, Implication):
                raise IllFormedRule(path, f"intro concludes atom {formula}")
            if node.premise.conclusion != formula.consequent:
                raise IllFormedRule(path, f"premise {node.premise.conclusion} is not the consequent of {formula}")
            if not isinstance(node.mark, int) or node.mark < 1:
                raise IllFormedRule(path, f"intro mark must be a positive integer, got {node.mark!r}")
            if node.mark in seen_marks:
                raise IllFormedRule(path, f"mark {node.mark} already used at node {seen_marks[node.mark]}")
            seen_marks[node.mark] = path
            active.append((formula.antecedent, node.mark))
            stack.append((path, node, True))
            stack.append((path + (0,), node.premise, False))
        elif isinstance(node, Elim):
            expected = Implication(node.minor.conclusion, node.conclusion)
            if node.major.conclusion != expected:
                raise IllFormedRule(path, f"major premise {node.major.conclusion} should be {expected}")
            stack.append((path + (1,), node.major, False))
            stack.append((path + (0,), node.minor, False))
        else:
            raise IllFormedRule(path, f"unknown node {type(node).__name__}")

    return Judgment(d.conclusion, open_assumptions)


def _check_hypothesis(path: Path, node: Hypothesis, active, open_assumptions: Counter):
    nearest = next((mark for antecedent, mark in reversed(active) if antecedent == node.formula), None)
    if node.mark is None:
        if nearest is not None:
            raise NonGreedyDischarge(path, f"open {node.formula} under intro with mark {nearest}")
        open_assumptions[node.formula] += 1
        return
    owner = next((antecedent for antecedent, mark in active if mark == node.mark), None)
    if owner is None:
        raise DanglingMark(path, f"mark {node.mark} names no intro below {node.formula}")
    if owner != node.formula:
        raise DanglingMark(path, f"mark {node.mark} discharges {owner}, not {node.formula}")
    if node.mark != nearest:
        raise NonGreedyDischarge(path, f"{node.formula} must be discharged by mark {nearest}, not {node.mark}")


def open_assumptions(d: Derivation) -> Counter:
    return check(d).open_assumptions


# =============================================================================
# CANONICAL MARKS
# =============================================================================

def canonicalize(d: Derivation) -> Derivation:
    """
    Recompute greedy discharges and number Intro marks in preorder

    Sub-derivations that contain no Intro and see the same discharge context are
    rebuilt once, so shared structure survives.
    """
    counter = [0]
    memo: Dict[Tuple[int, Tuple, int], Tuple[Derivation, int]] = {}

    def rebuild(node, context: Tuple[Tuple[Formula, int], ...]):
        key = (id(node), context, counter[0])
        cached = memo.get(key)
        if cached is not None:
            counter[0] += cached[1]
            return cached[0]
        start = counter[0]

        if isinstance(node, Hypothesis):
            mark = next((m for antecedent, m in reversed(context) if antecedent == node.formula), None)
            result = node if mark == node.mark else Hypothesis(node.formula, mark)
        elif isinstance(node, Intro):
            counter[0] += 1
            mark = counter[0]
            inner = tuple(entry for entry in context if entry[0] != node.conclusion.antecedent)
            premise = rebuild(node.premise, inner + ((node.conclusion.antecedent, mark),))
            result = node if (premise is node.premise and mark == node.mark) else Intro(node.conclusion, premise, mark)
        else:
            minor = rebuild(node.minor, context)
            major = rebuild(node.major, context)
            result = node if (minor is node.minor and major is node.major) else Elim(node.conclusion, minor, major)

        memo[key] = (result, counter[0] - start)
        return result

    return rebuild(d, ())


# =============================================================================
# BRANCHES & NORMAL FORMS
# =============================================================================

def branches(d: Derivation) -> List[Branch]:
    """Partition of the occurrences into branches, ordered by top-formula preorder"""
    nodes = dict(walk(d))
    result = []
    for path, node in walk(d):
        if not isinstance(node, Hypothesis):
            continue
        trail = [path]
        elim_steps = 0
        in_e_part = True
        current = path
        while current:
            parent_path, index = current[:-1], current[-1]
            parent = nodes[parent_path]
            if isinstance(parent, Elim) and index == 1:
                if in_e_part:
                    elim_steps += 1
            elif isinstance(parent, Intro):
                in_e_part = False
            else:
                break
            trail.append(parent_path)
            current = parent_path
        result.append(Branch(tuple(trail), tuple(nodes[p].conclusion for p in trail), elim_steps))
    return result


def main_branch(d: Derivation) -> Branch:
    return next(b for b in branches(d) if b.nodes[-1] == ())


def maximal_formulas(d: Derivation) -> List[Path]:
    """Intro conclusions used as Elim major premises, leftmost-outermost first"""
    return [path + (1,) for path, node in walk(d)
            if isinstance(node, Elim) and isinstance(node.major, Intro)]


def is_normal(d: Derivation) -> bool:
    seen = set()
    stack = [d]
    while stack:
        node = stack.pop()
        if id(node) in seen:
            continue
        seen.add(id(node))
        if isinstance(node, Elim) and isinstance(node.major, Intro):
            return False
        stack.extend(node.children())
    return True


def _substitute(d: Derivation, target: Formula, mark: int, replacement: Derivation) -> Derivation:
    if isinstance(d, Hypothesis):
        return replacement if (d.mark == mark and d.formula == target) else d
    if isinstance(d, Intro):
        return Intro(d.conclusion, _substitute(d.premise, target, mark, replacement), d.mark)
    return Elim(d.conclusion,
                _substitute(d.minor, target, mark, replacement),
                _substitute(d.major, target, mark, replacement))


def contract(d: Derivation, path: Path) -> Derivation:
    """Contract the maximal formula at path (an Intro that is a major premise)"""
    redex_path = path[:-1]
    redex = node_at(d, redex_path)
    if not (isinstance(redex, Elim) and path[-1] == 1 and isinstance(redex.major, Intro)):
        raise IllFormedRule(path, "not a maximal formula")
    body = redex.major
    reduced = _substitute(body.premise, body.conclusion.antecedent, body.mark, redex.minor)
    return canonicalize(replace_at(d, redex_path, reduced))


def normalize(d: Derivation) -> Derivation:
    """Leftmost-outermost reduction to a normal derivation with canonical marks"""
    current = canonicalize(d)
    while True:
        redexes = maximal_formulas(current)
        if not redexes:
            return current
        current = contract(current, redexes[0])


def subformula_principle_check(d: Derivation) -> bool:
    judgment = check(d)
    allowed = set(subformula_closure([judgment.conclusion, *judgment.open_assumptions]))
    return formulas(d) <= allowed


def epart_signature(b: Branch):
    """Major premise of the topmost Elim of the branch, or NO_E_PART"""
    if b.split == 0:
        return NO_E_PART
    return b.formulas[0]


# =============================================================================
# FIXTURES
# =============================================================================

def prove_identity_pair() -> Tuple[Derivation, Derivation]:
    """
    The greedy proof of A -> (A -> A) and its liberal variant

    Under greedy discharging the upper Intro discharges A and the lower one is
    vacuous; the variant discharging A at the lower Intro is rejected by check().
    """
    a = Atom('A')
    greedy = Intro(implies(a, a, a), Intro(implies(a, a), Hypothesis(a, 2), 2), 1)
    liberal = Intro(implies(a, a, a), Intro(implies(a, a), Hypothesis(a, 1), 2), 1)
    return greedy, liberal
