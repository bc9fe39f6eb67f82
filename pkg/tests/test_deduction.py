# Test derivation checking, branches and normalization
import os
import sys
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

# Add parent directory to path for imports
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from core.deduction import (NO_E_PART, Elim, Hypothesis, Intro, branches, canonicalize, check,
                            contract, elim, epart_signature, formulas, height, hyp, intro,
                            is_normal, main_branch, maximal_formulas, normalize,
                            prove_identity_pair, size, subformula_principle_check, walk)
from core.formula import Atom, Implication, atoms, parse, right_spine
from core.generators import fibonacci_derivation
from data.errors import DanglingMark, IllFormedRule, NonGreedyDischarge, ProofSyntaxError
from export.proof_text import parse_proof, render_proof


def figure_derivation():
    """A -> B, B -> C |- A -> C"""
    a, b, c = atoms('A', 'B', 'C')
    body = Elim(c, Elim(b, Hypothesis(a, 1), Hypothesis(Implication(a, b))), Hypothesis(Implication(b, c)))
    return Intro(Implication(a, c), body, 1)


def derivation_strategy():
    names = st.sampled_from(['A', 'B', 'C']).map(Atom)
    leaves = st.recursive(names, lambda ch: st.builds(Implication, ch, ch), max_leaves=3).map(hyp)

    def extend(children):
        return st.one_of(
            st.tuples(children, names).map(lambda p: intro(p[1], p[0])),
            st.tuples(children, names).map(lambda p: elim(p[0], hyp(Implication(p[0].conclusion, p[1])))),
            # injected redex: Intro immediately used as a major premise
            st.tuples(children, children).map(lambda p: elim(p[1], intro(p[1].conclusion, p[0]))),
        )

    return st.recursive(leaves, extend, max_leaves=8).map(canonicalize)


class TestCheck:

    def setup_method(self):
        self.a, self.b, self.c = atoms('A', 'B', 'C')
        self.figure = figure_derivation()

    def test_figure_judgment(self):
        judgment = check(self.figure)
        assert judgment.conclusion == parse("A -> C")
        assert judgment.open_assumptions == Counter({parse("A -> B"): 1, parse("B -> C"): 1})

    def test_single_hypothesis(self):
        judgment = check(Hypothesis(self.a))
        assert judgment.conclusion == self.a
        assert judgment.open_set == frozenset({self.a})

    def test_identity_pair(self):
        greedy, liberal = prove_identity_pair()
        judgment = check(greedy)
        assert judgment.conclusion == parse("A -> A -> A")
        assert not judgment.open_assumptions
        with pytest.raises(NonGreedyDischarge):
            check(liberal)

    def test_open_occurrence_under_matching_intro_is_non_greedy(self):
        with pytest.raises(NonGreedyDischarge) as error:
            check(Intro(parse("A -> A"), Hypothesis(self.a), 1))
        assert error.value.node == (0,)

    def test_dangling_marks(self):
        with pytest.raises(DanglingMark):
            check(Hypothesis(self.a, 5))
        with pytest.raises(DanglingMark):
            check(Intro(parse("B -> A"), Hypothesis(self.a, 1), 1))

    def test_ill_formed_rules(self):
        with pytest.raises(IllFormedRule) as error:
            check(Elim(self.c, Hypothesis(self.a), Hypothesis(parse("B -> C"))))
        assert error.value.node == ()
        with pytest.raises(IllFormedRule):
            check(Intro(self.a, Hypothesis(self.a), 1))
        with pytest.raises(IllFormedRule):
            check(Intro(parse("A -> A -> A"), Intro(parse("A -> A"), Hypothesis(self.a, 1), 1), 1))

    def test_smart_constructors(self):
        built = canonicalize(intro(self.a, elim(elim(hyp(self.a), hyp(parse("A -> B"))), hyp(parse("B -> C")))))
        assert built == self.figure
        with pytest.raises(IllFormedRule):
            elim(hyp(self.a), hyp(parse("B -> C")))

    def test_canonicalize_renumbers_marks_in_preorder(self):
        d = Elim(self.a, Intro(parse("A -> A"), Hypothesis(self.a, 7), 7), Intro(parse("(A -> A) -> A"), Hypothesis(self.a), 3))
        canonical = canonicalize(d)
        assert canonical.minor.mark == 1
        assert canonical.minor.premise.mark == 1
        assert canonical.major.mark == 2
        assert canonicalize(canonical) == canonical


class TestBranches:

    def setup_method(self):
        self.figure = figure_derivation()

    def test_figure_branches(self):
        found = [[str(f) for f in b.formulas] for b in branches(self.figure)]
        assert found == [["A"], ["A -> B", "B"], ["B -> C", "C", "A -> C"]]

    def test_every_occurrence_on_exactly_one_branch(self):
        for d in (self.figure, fibonacci_derivation(6), prove_identity_pair()[0]):
            covered = Counter(path for b in branches(d) for path in b.nodes)
            assert sorted(covered) == sorted(path for path, _ in walk(d))
            assert set(covered.values()) == {1}

    def test_main_branch_ends_at_conclusion(self):
        main = main_branch(self.figure)
        assert main.formulas[-1] == parse("A -> C")
        assert epart_signature(main) == parse("B -> C")
        assert main.e_part == tuple(right_spine(parse("B -> C")))

    def test_single_hypothesis(self):
        only = branches(Hypothesis(Atom('A')))
        assert len(only) == 1
        assert only[0].formulas == (Atom('A'),)
        assert epart_signature(only[0]) is NO_E_PART

    def test_intro_only_branch(self):
        greedy, _ = prove_identity_pair()
        assert epart_signature(main_branch(greedy)) is NO_E_PART

    def test_fibonacci_two_main_branch(self):
        main = main_branch(fibonacci_derivation(2))
        assert epart_signature(main) == parse("A1 -> A2")
        assert main.formulas[-1] == Atom('A2')

    @pytest.mark.parametrize("d", [figure_derivation(), fibonacci_derivation(2),
                                   fibonacci_derivation(7), fibonacci_derivation(10)])
    def test_signature_count_bound_on_families(self, d):
        signatures = {epart_signature(b) for b in branches(d)} - {NO_E_PART}
        assert len(signatures) <= len(formulas(d)) // 3

    def test_equal_signatures_share_e_parts_on_fibonacci(self):
        by_signature = {}
        for b in branches(fibonacci_derivation(9)):
            if b.split:
                by_signature.setdefault(epart_signature(b), set()).add(b.e_part)
        assert all(len(parts) == 1 for parts in by_signature.values())


class TestNormalize:

    def setup_method(self):
        self.a, self.b, self.c = atoms('A', 'B', 'C')

    def test_normal_derivations_are_fixpoints(self):
        d = figure_derivation()
        assert maximal_formulas(d) == []
        assert is_normal(d)
        assert normalize(d) == d

    def test_single_redex(self):
        sigma = elim(hyp(self.a), hyp(parse("A -> B")))
        body = elim(hyp(self.b), hyp(parse("B -> C")))
        redex = canonicalize(elim(sigma, intro(self.b, body)))
        assert maximal_formulas(redex) == [(1,)]
        assert not is_normal(redex)
        expected = elim(sigma, hyp(parse("B -> C")))
        assert contract(redex, (1,)) == expected
        assert normalize(redex) == expected

    def test_nested_double_redex_from_fibonacci_two(self):
        a1 = Atom('A1')
        inner = intro(a1, elim(hyp(a1), hyp(parse("A1 -> A2"))))
        outer = intro(a1, elim(hyp(a1), inner))
        redex = canonicalize(elim(hyp(a1), outer))
        assert normalize(redex) == fibonacci_derivation(2)

    def test_foreign_maximal_formula_breaks_subformula_principle(self):
        d_atom = Atom('D')
        d = canonicalize(elim(intro(d_atom, hyp(d_atom)), intro(parse("D -> D"), hyp(self.a))))
        check(d)
        assert not subformula_principle_check(d)
        normal = normalize(d)
        assert normal == Hypothesis(self.a)
        assert subformula_principle_check(normal)

    @settings(max_examples=1000, deadline=None)
    @given(derivation_strategy())
    def test_normalization_properties(self, d):
        before = check(d)
        normal = normalize(d)
        after = check(normal)
        assert maximal_formulas(normal) == []
        assert is_normal(normal)
        assert after.conclusion == before.conclusion
        assert after.open_set <= before.open_set
        assert subformula_principle_check(normal)
        assert normalize(normal) == normal

    @settings(max_examples=200, deadline=None)
    @given(derivation_strategy())
    def test_branches_of_normal_derivations(self, d):
        normal = normalize(d)
        nodes = dict(walk(normal))
        for b in branches(normal):
            for step, path in enumerate(b.nodes[1:], start=1):
                below_elim = isinstance(nodes[path], Elim)
                assert below_elim == (step <= b.split)
            if b.split:
                signature = epart_signature(b)
                assert b.e_part == tuple(right_spine(signature)[:len(b.e_part)])


class TestProofText:

    def test_round_trip(self):
        for d in (figure_derivation(), prove_identity_pair()[0], prove_identity_pair()[1],
                  fibonacci_derivation(5), fibonacci_derivation(4, with_intro=True)):
            assert parse_proof(render_proof(d)) == d

    def test_whitespace_insensitive(self):
        text = '(intro "A -> C" 1 (elim "C" (elim "B" (hyp "A" 1) (hyp "A -> B")) (hyp "B -> C")))'
        assert parse_proof(text) == figure_derivation()
        assert parse_proof(text.replace(' (', '\n   (')) == figure_derivation()

    @pytest.mark.parametrize("text, offset", [
        ('(hyp "A ->")', 10),
        ('(hyp "A"', 8),
        ('(foo "A")', 1),
    ])
    def test_syntax_errors(self, text, offset):
        with pytest.raises(ProofSyntaxError) as error:
            parse_proof(text)
        assert error.value.offset == offset

    def test_measures_follow_sharing(self):
        d = fibonacci_derivation(15)
        assert size(d) == 3191
        assert height(d) == 14
