# Test repeated-subtree analysis
import os
import sys

import pytest

# Add parent directory to path for imports
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from core.deduction import Elim, Hypothesis, Intro
from core.eoltree import SkeletalTree, from_derivation, skeletal_match
from core.formula import atoms, parse
from core.generators import fibonacci_atom, fibonacci_derivation
from core.redundancy import analyze, default_threshold, dominant_term, polyfront


def figure_tree():
    a, b, c = atoms('A', 'B', 'C')
    body = Elim(c, Elim(b, Hypothesis(a, 1), Hypothesis(parse("A -> B"))), Hypothesis(parse("B -> C")))
    return from_derivation(Intro(parse("A -> C"), body, 1))


class TestAnalyze:

    def setup_method(self):
        self.tree = from_derivation(fibonacci_derivation(15))

    def test_default_threshold(self):
        assert default_threshold(self.tree) == 2 * (3 * 15 - 3)

    def test_fibonacci_fifteen(self):
        report = analyze(self.tree)
        assert not report.is_empty
        assert report.threshold == 84
        assert report.level == 10
        assert report.histogram[10][fibonacci_atom(5)] == 89
        repeated = report.repeated[0]
        assert repeated.multiplicity == 89
        assert repeated.pattern.label == fibonacci_atom(5)
        assert repeated.pattern == SkeletalTree.from_subtree(from_derivation(fibonacci_derivation(5)), 0)
        assert repeated.pattern.size() == 23

    def test_roots_are_real_occurrences(self):
        repeated = analyze(self.tree).repeated[0]
        found = skeletal_match(repeated.pattern, self.tree)
        assert repeated.roots == sorted(o.root for o in found if o.level == repeated.level)

    def test_nothing_repeats_in_small_proofs(self):
        report = analyze(figure_tree())
        assert report.is_empty
        assert report.level is None
        assert report.repeated == []
        assert report.histogram[0] == {parse("A -> C"): 1}

    def test_explicit_threshold(self):
        report = analyze(from_derivation(fibonacci_derivation(6)), threshold=3)
        assert report.level == 3
        repeated = report.repeated[0]
        assert repeated.multiplicity == 3
        assert repeated.pattern.size() == 7

    def test_all_levels(self):
        report = analyze(from_derivation(fibonacci_derivation(6)), threshold=3, all_levels=True)
        assert report.level == 3
        assert [r.level for r in report.repeated] == [3, 4, 5]
        assert [r.multiplicity for r in report.repeated] == [3, 5, 8]
        assert report.repeated[1].pattern.label == fibonacci_atom(2)
        assert report.repeated[2].pattern == SkeletalTree(fibonacci_atom(1))

    def test_intro_chain(self):
        a = atoms('A')[0]
        chain = Intro(parse("A -> A -> A"), Intro(parse("A -> A"), Hypothesis(a, 2), 2), 1)
        report = analyze(from_derivation(chain), threshold=1)
        assert report.level == 0
        pattern = report.repeated[0].pattern
        assert pattern.size() == 3
        assert pattern.height() == 2


class TestPolyfront:

    def test_fibonacci_ten(self):
        tree = from_derivation(fibonacci_derivation(10))
        assert polyfront(tree) == 7
        assert polyfront(tree, p=2) == 9

    def test_small_tree_is_all_front(self):
        tree = figure_tree()
        assert polyfront(tree) == tree.height()

    @pytest.mark.parametrize("row, expected", [([1, 3, 3, 2], 1), ([5], 0), ([0, 0, 1], 2)])
    def test_dominant_term(self, row, expected):
        assert dominant_term(row) == expected

    def test_dominant_term_needs_values(self):
        with pytest.raises(ValueError):
            dominant_term([])
