"""
Implicational formulas: parsing, rendering, sub-formulas and syntax trees

The only connective is implication; "A -> B -> C" groups to the right.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, List, Optional, Tuple

from lark import Lark, Transformer
from lark.exceptions import UnexpectedCharacters, UnexpectedInput, UnexpectedToken, VisitError

from config.settings import GRAMMAR_PATH
from data.errors import FormulaSyntaxError


# =============================================================================
# FORMULA VALUES
# =============================================================================

class Formula:
    """Common base of Atom and Implication"""

    __slots__ = ()

    @property
    def is_atom(self) -> bool:
        return isinstance(self, Atom)

    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True)
class Atom(Formula):
    name: str
    size: int = field(init=False, default=1, repr=False, compare=False)
    _hash: int = field(init=False, default=0, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, '_hash', hash(('atom', self.name)))

    def __hash__(self) -> int:
        return self._hash


@dataclass(frozen=True)
class Implication(Formula):
    antecedent: Formula
    consequent: Formula
    size: int = field(init=False, default=0, repr=False, compare=False)
    _hash: int = field(init=False, default=0, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'size', 1 + self.antecedent.size + self.consequent.size)
        object.__setattr__(self, '_hash', hash(('imp', self.antecedent._hash, self.consequent._hash)))

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, Implication) or self._hash != other._hash:
            return False
        return self.antecedent == other.antecedent and self.consequent == other.consequent


def implies(*parts: Formula) -> Formula:
    """Right-nested implication: implies(a, b, c) = a -> (b -> c)"""
    if not parts:
        raise ValueError("implies() needs at least one formula")
    result = parts[-1]
    for part in reversed(parts[:-1]):
        result = Implication(part, result)
    return result


def atoms(*names: str) -> Tuple[Atom, ...]:
    return tuple(Atom(name) for name in names)


# =============================================================================
# PARSING & RENDERING
# =============================================================================

class _FormulaBuilder(Transformer):
    def atom(self, children):
        return Atom(str(children[0]))

    def imp(self, children):
        return Implication(children[0], children[1])


_PARSER = Lark.open(str(GRAMMAR_PATH), parser='lalr', start=['formula', 'proof'],
                    propagate_positions=False, maybe_placeholders=False)
_FORMULA_PARSER = Lark.open(str(GRAMMAR_PATH), parser='lalr', start='formula',
                            transformer=_FormulaBuilder())


def grammar_parser() -> Lark:
    """Shared tree-building parser (used for proof text)"""
    return _PARSER


def error_offset(error: UnexpectedInput, text: str) -> int:
    """Character offset of a lark error; end of input maps to len(text)"""
    if isinstance(error, UnexpectedToken) and error.token.type == '$END':
        return len(text)
    if isinstance(error, UnexpectedCharacters):
        return error.pos_in_stream
    pos = getattr(error, 'pos_in_stream', None)
    if pos is None:
        token = getattr(error, 'token', None)
        pos = getattr(token, 'start_pos', None)
    return len(text) if pos is None else pos


@lru_cache(maxsize=8192)
def parse(text: str) -> Formula:
    """
    Parse a formula

    Args:
        text: formula in the "->" grammar

    Returns:
        The unique right-associative AST

    Raises:
        FormulaSyntaxError: with the offending character offset
    """
    try:
        return _FORMULA_PARSER.parse(text)
    except UnexpectedInput as error:
        raise FormulaSyntaxError("syntax error", error_offset(error, text)) from None
    except VisitError as error:
        raise FormulaSyntaxError(f"syntax error: {error.orig_exc}", 0) from None


def render(f: Formula) -> str:
    """Render with parentheses only around implication antecedents"""
    pieces = []
    while isinstance(f, Implication):
        left = render(f.antecedent)
        pieces.append(f"({left})" if isinstance(f.antecedent, Implication) else left)
        f = f.consequent
    pieces.append(f.name)
    return ' -> '.join(pieces)


def length(f: Formula) -> int:
    """String-length size measure (rendered text)"""
    return len(render(f))


def size(f: Formula) -> int:
    """Node count of the abstract syntax tree"""
    return f.size


# =============================================================================
# SUB-FORMULAS
# =============================================================================

def formula_key(f: Formula) -> Tuple[int, str]:
    """Canonical order: atoms first, then by size, ties by rendered text"""
    return f.size, render(f)


def subformula_closure(formulas: Iterable[Formula]) -> List[Formula]:
    seen = set()
    stack = list(formulas)
    while stack:
        f = stack.pop()
        if f in seen:
            continue
        seen.add(f)
        if isinstance(f, Implication):
            stack.append(f.antecedent)
            stack.append(f.consequent)
    return sorted(seen, key=formula_key)


def subformulas(f: Formula) -> List[Formula]:
    return subformula_closure([f])


def is_subformula(a: Formula, b: Formula) -> bool:
    stack = [b]
    while stack:
        f = stack.pop()
        if f == a:
            return True
        if isinstance(f, Implication) and f.size > a.size:
            stack.append(f.antecedent)
            stack.append(f.consequent)
    return False


def antecedents(f: Formula) -> Tuple[List[Formula], Atom]:
    """Split f = a1 -> (a2 -> ... (an -> q)) into ([a1..an], q)"""
    result = []
    while isinstance(f, Implication):
        result.append(f.antecedent)
        f = f.consequent
    return result, f


def right_spine(f: Formula) -> List[Formula]:
    """f, its consequent, the consequent's consequent, ... down to the atom"""
    spine = [f]
    while isinstance(f, Implication):
        f = f.consequent
        spine.append(f)
    return spine


# =============================================================================
# SYNTAX TREES
# =============================================================================

@dataclass(frozen=True)
class SyntaxTree:
    """Abstract syntax tree T_f; internal nodes are implications"""
    formula: Formula
    left: Optional['SyntaxTree'] = None
    right: Optional['SyntaxTree'] = None

    @property
    def symbol(self) -> str:
        return '->' if isinstance(self.formula, Implication) else self.formula.name

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    def children(self) -> Tuple['SyntaxTree', ...]:
        return () if self.left is None else (self.left, self.right)

    def measures(self) -> Tuple[int, int]:
        count, height = 0, 0
        stack = [(self, 0)]
        while stack:
            node, depth = stack.pop()
            count += 1
            height = max(height, depth)
            stack.extend((child, depth + 1) for child in node.children())
        return count, height


def syntax_tree(f: Formula) -> SyntaxTree:
    if isinstance(f, Implication):
        return SyntaxTree(f, syntax_tree(f.antecedent), syntax_tree(f.consequent))
    return SyntaxTree(f)


def tree_measures(tree) -> Tuple[int, int]:
    """
    Size and height of a SyntaxTree or EOLTree

    Returns:
        (node count, edge length of the longest root-to-leaf path)
    """
    return tree.measures()
