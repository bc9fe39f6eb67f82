# Test formula parsing, rendering and syntax trees
import os
import sys

import pytest
from hypothesis import given, strategies as st

# Add parent directory to path for imports
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from core.formula import (Atom, Implication, antecedents, atoms, implies, is_subformula, length,
                          parse, render, right_spine, size, subformula_closure, subformulas,
                          syntax_tree, tree_measures)
from data.errors import FormulaSyntaxError


def formula_strategy(names=('A', 'B', 'C')):
    leaves = st.sampled_from(names).map(Atom)
    return st.recursive(leaves, lambda children: st.builds(Implication, children, children), max_leaves=12)


class TestParse:

    def setup_method(self):
        self.a, self.b, self.c = atoms('A', 'B', 'C')

    def test_implication_groups_to_the_right(self):
        assert parse("A -> B -> C") == implies(self.a, self.b, self.c)
        assert parse("A->(B->C)") == parse("A -> B -> C")

    def test_parenthesized_antecedent(self):
        f = parse("(A -> B) -> C")
        assert f == Implication(Implication(self.a, self.b), self.c)
        assert render(f) == "(A -> B) -> C"

    def test_redundant_parentheses_are_dropped(self):
        assert render(parse("((A))")) == "A"
        assert render(parse("(A -> (B -> C))")) == "A -> B -> C"

    def test_atom_names(self):
        assert parse("X_1_2") == Atom("X_1_2")
        assert parse("  ORX3 ") == Atom("ORX3")

    @pytest.mark.parametrize("text, offset", [
        ("A ->", 4),
        ("", 0),
        (")", 0),
        ("A B", 2),
        ("A -> 1", 5),
        ("(A -> B", 7),
    ])
    def test_syntax_errors_report_offsets(self, text, offset):
        with pytest.raises(FormulaSyntaxError) as error:
            parse(text)
        assert error.value.offset == offset

    @given(formula_strategy())
    def test_render_parse_round_trip(self, f):
        assert parse(render(f)) == f

    def test_length_and_size(self):
        f = parse("(A -> B) -> A")
        assert size(f) == 5
        assert length(f) == len("(A -> B) -> A")


class TestSubformulas:

    def setup_method(self):
        self.a, self.b, self.c, self.d = atoms('A', 'B', 'C', 'D')

    def test_order_atoms_first_then_size(self):
        result = subformulas(parse("(A -> B) -> A"))
        assert result == [self.a, self.b, Implication(self.a, self.b), parse("(A -> B) -> A")]

    def test_closure_deduplicates(self):
        closure = subformula_closure([parse("A -> B"), parse("B -> C"), parse("A -> C")])
        assert [render(f) for f in closure] == ["A", "B", "C", "A -> B", "A -> C", "B -> C"]

    def test_is_subformula(self):
        f = parse("(A -> B) -> C")
        assert is_subformula(parse("A -> B"), f)
        assert not is_subformula(parse("B -> C"), f)

    def test_antecedents(self):
        assert antecedents(parse("A -> (B -> C) -> D")) == ([self.a, parse("B -> C")], self.d)
        assert antecedents(self.a) == ([], self.a)

    def test_right_spine(self):
        f = parse("A -> B -> C")
        assert right_spine(f) == [f, parse("B -> C"), self.c]

    @given(formula_strategy())
    def test_subformula_count_bounded_by_tree_size(self, f):
        assert len(subformulas(f)) <= size(f)

    @given(formula_strategy())
    def test_right_spine_has_one_internal_node_per_antecedent(self, f):
        spine = right_spine(f)
        internal = [g for g in spine if isinstance(g, Implication)]
        assert len(internal) == len(antecedents(f)[0])


class TestSyntaxTree:

    def test_measures(self):
        tree = syntax_tree(parse("(A -> B) -> (A -> B)"))
        assert tree_measures(tree) == (7, 2)
        assert tree.symbol == '->'
        assert tree.left.formula == parse("A -> B")

    def test_single_atom(self):
        tree = syntax_tree(Atom('A'))
        assert tree.is_leaf
        assert tree_measures(tree) == (1, 0)

    @given(formula_strategy())
    def test_full_binary_tree_height_bounds(self, f):
        nodes, height = tree_measures(syntax_tree(f))
        assert nodes == size(f)
        assert nodes.bit_length() - 1 <= height <= (nodes - 1) // 2
