"""
Proof s-expressions

    (hyp "F" [mark]) | (intro "F" mark SUB) | (elim "F" MINOR MAJOR)
"""

from typing import List

from lark import Token, Tree
from lark.exceptions import UnexpectedInput

from core.deduction import Derivation, Elim, Hypothesis, Intro
from core.formula import error_offset, grammar_parser, parse, render
from data.errors import FormulaSyntaxError, ProofSyntaxError


def parse_proof(text: str) -> Derivation:
    """
    Parse a proof s-expression

    Rule shapes are not checked here; run check() on the result.

    Raises:
        ProofSyntaxError: with the character offset of the problem
    """
    try:
        tree = grammar_parser().parse(text, start='proof')
    except UnexpectedInput as error:
        raise ProofSyntaxError("syntax error", error_offset(error, text)) from None
    return _build(tree)


def _formula(token: Token):
    try:
        return parse(token.value[1:-1])
    except FormulaSyntaxError as e:
        raise ProofSyntaxError(f"bad formula {token.value}", token.start_pos + 1 + e.offset) from None


def _build(root: Tree) -> Derivation:
    # postorder without recursion; proofs can be deep
    built = {}
    stack = [(root, False)]
    while stack:
        node, ready = stack.pop()
        subtrees = [child for child in node.children if isinstance(child, Tree)]
        if not ready:
            stack.append((node, True))
            stack.extend((child, False) for child in reversed(subtrees))
            continue
        tokens = [child for child in node.children if isinstance(child, Token)]
        formula = _formula(tokens[0])
        if node.data == 'hyp':
            mark = int(tokens[1]) if len(tokens) > 1 else None
            built[id(node)] = Hypothesis(formula, mark)
        elif node.data == 'intro':
            built[id(node)] = Intro(formula, built[id(subtrees[0])], int(tokens[1]))
        else:
            built[id(node)] = Elim(formula, built[id(subtrees[0])], built[id(subtrees[1])])
    return built[id(root)]


def render_proof(d: Derivation) -> str:
    """One node per line, two-space indentation"""
    lines: List[str] = []
    stack = [(d, 0, 0)]
    while stack:
        node, depth, closers = stack.pop()
        pad = '  ' * depth
        text = f'"{render(node.conclusion)}"'
        if isinstance(node, Hypothesis):
            mark = '' if node.mark is None else f' {node.mark}'
            lines.append(f"{pad}(hyp {text}{mark})" + ')' * closers)
        elif isinstance(node, Intro):
            lines.append(f"{pad}(intro {text} {node.mark}")
            stack.append((node.premise, depth + 1, closers + 1))
        else:
            lines.append(f"{pad}(elim {text}")
            stack.append((node.major, depth + 1, closers + 1))
            stack.append((node.minor, depth + 1, 0))
    return '\n'.join(lines) + '\n'
