"""
Repeated skeletal subtrees per level

analyze() finds the least level where some label occurs at least `threshold`
times and grows a subtree shared by those occurrences, level by level:
leaves stop the growth, unary nodes continue through their U-child, binary nodes
continue through the most frequent (minor, major) label pair.
"""

import math
from typing import Dict, List, Optional, Sequence, Tuple

from config.settings import ANALYSIS_CONFIG
from core.eoltree import (L, R, U, EOLTree, SkeletalTree, histogram_rows, label_set,
                          level_histogram, skeletal_match, structure_classes)
from core.formula import Formula, formula_key
from data.models import RedundancyReport, RepeatedSubtree


def default_threshold(t: EOLTree) -> int:
    return ANALYSIS_CONFIG['threshold_factor'] * len(label_set(t))


class _Grower:
    """Grows a common pattern from a group of equally labelled nodes"""

    def __init__(self, t: EOLTree, need: int):
        self.t = t
        self.need = need

    def grow(self, nodes: List[int]) -> Tuple[SkeletalTree, List[int]]:
        """Pattern shared by the returned support (a subset of nodes, never below need)"""
        t = self.t
        label = t.labels[nodes[0]]
        leaf = (SkeletalTree(label), nodes)

        zero, un, binary = [], [], []
        for v in nodes:
            rule = t.rule(v)
            (zero if rule == 'leaf' else un if rule == 'intro' else binary).append(v)

        # largest class; ties prefer the class that extends further
        chosen = max((binary, un, zero), key=len)
        if len(chosen) < self.need or chosen is zero:
            return leaf

        if chosen is un:
            child_of = {t.child(v, U): v for v in un}
            pattern, support = self.grow(sorted(child_of))
            return SkeletalTree(label, ((U, pattern),)), sorted(child_of[c] for c in support)

        groups: Dict[Formula, List[int]] = {}
        for v in binary:
            groups.setdefault(t.labels[t.child(v, L)], []).append(v)
        minor_label = max(sorted(groups, key=formula_key), key=lambda f: len(groups[f]))
        group = groups[minor_label]
        if len(group) < self.need:
            return leaf

        left_of = {t.child(v, L): v for v in group}
        left_pattern, left_support = self.grow(sorted(left_of))
        survivors = sorted(left_of[c] for c in left_support)

        right_of = {t.child(v, R): v for v in survivors}
        right_pattern, right_support = self.grow(sorted(right_of))
        support = sorted(right_of[c] for c in right_support)
        return SkeletalTree(label, ((L, left_pattern), (R, right_pattern))), support


def _candidate(t: EOLTree, level: int, nodes: List[int], need: int, classes) -> RepeatedSubtree:
    pattern, _ = _Grower(t, need).grow(nodes)
    roots = sorted(o.root for o in skeletal_match(pattern, t, classes) if o.level == level)
    return RepeatedSubtree(level, pattern, len(roots), roots)


def _rank(candidate: RepeatedSubtree):
    # larger multiplicity, then larger pattern, then the smaller canonical form
    return -candidate.multiplicity, -candidate.pattern.size(), candidate.pattern.canonical()


def analyze(t: EOLTree, threshold: Optional[int] = None, all_levels: bool = False) -> RedundancyReport:
    """
    Find the least level with a label occurring at least threshold times

    Args:
        t: a valid EOL-tree
        threshold: occurrence count to reach; 2 * |B(t)| when omitted
        all_levels: report every qualifying level instead of the least one

    Returns:
        RedundancyReport; empty (level None) when no level reaches threshold
    """
    threshold = default_threshold(t) if threshold is None else threshold
    rows = histogram_rows(level_histogram(t))
    report = RedundancyReport(threshold, rows)

    qualifying = [level for level in sorted(rows)
                  if any(count >= threshold for count in rows[level].values())]
    if not qualifying:
        return report

    need = max(1, math.ceil(threshold * ANALYSIS_CONFIG['shrink']))
    classes = structure_classes(t)
    report.level = qualifying[0]
    for level in (qualifying if all_levels else qualifying[:1]):
        candidates = []
        for label in sorted(rows[level], key=formula_key):
            if rows[level][label] < threshold:
                continue
            nodes = [v for v in range(len(t)) if t.levels[v] == level and t.labels[v] == label]
            candidates.append(_candidate(t, level, nodes, need, classes))
        report.repeated.append(min(candidates, key=_rank))
    return report


def polyfront(t: EOLTree, p: int = 1) -> int:
    """Greatest level j such that no level up to j has a label count above |B(t)|^p"""
    bound = len(label_set(t)) ** p
    rows = histogram_rows(level_histogram(t))
    front = 0
    for level in range(t.height() + 1):
        if max(rows.get(level, {0: 0}).values()) > bound:
            break
        front = level
    return front


def dominant_term(row: Sequence[int]) -> int:
    """Index of a maximal count; ties go to the smallest index"""
    if not row:
        raise ValueError("dominant_term needs a nonempty row")
    best = 0
    for index, value in enumerate(row):
        if value > row[best]:
            best = index
    return best
