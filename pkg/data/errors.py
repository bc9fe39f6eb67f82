"""
Exception hierarchy shared by every module
"""

from typing import Optional, Sequence, Tuple


class MimpError(Exception):
    """Base class for all toolkit errors"""


class FormulaSyntaxError(MimpError):
    """Malformed formula text"""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class ProofSyntaxError(MimpError):
    """Malformed proof s-expression"""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class DerivationError(MimpError):
    """A derivation node violates a rule shape or the discharge policy"""

    kind = 'derivation-error'

    def __init__(self, node: Tuple[int, ...], reason: str):
        super().__init__(f"{self.kind} at node {format_path(node)}: {reason}")
        self.node = node
        self.reason = reason


class IllFormedRule(DerivationError):
    kind = 'ill-formed-rule'


class DanglingMark(DerivationError):
    kind = 'dangling-mark'


class NonGreedyDischarge(DerivationError):
    kind = 'non-greedy-discharge'


class OrderIncomplete(MimpError):
    """A bitstring order misses formulas that occur in the derivation"""

    def __init__(self, missing: Sequence[str]):
        super().__init__(f"order does not cover: {', '.join(missing)}")
        self.missing = list(missing)


class BudgetExceeded(MimpError):
    """A construction would exceed the configured node budget"""

    def __init__(self, required: int, limit: int, what: str = 'nodes'):
        super().__init__(f"budget exceeded: {what} needs {required} > budget {limit}")
        self.required = required
        self.limit = limit


class GraphFormatError(MimpError):
    """Malformed graph file or invalid simple digraph"""


class GraphIsHamiltonian(MimpError):
    """A non-Hamiltonicity certificate was requested for a Hamiltonian graph"""

    def __init__(self, path: Sequence[int]):
        super().__init__(f"graph is hamiltonian: path {' '.join(map(str, path))}")
        self.path = list(path)


class ValidPathError(MimpError):
    """refute_path was given a valid Hamiltonian path"""

    def __init__(self, path: Sequence[int]):
        super().__init__(f"sequence is a valid hamiltonian path: {list(path)}")
        self.path = list(path)


class OracleBudgetExceeded(MimpError):
    """Graph too large for the exhaustive Hamiltonian oracle"""


class FibonacciRangeError(MimpError):
    """Level outside 0..n-1 for the Fibonacci occurrence law"""


class FormatError(MimpError):
    """Malformed EOL/DAG/report text"""


def format_path(path: Optional[Tuple[int, ...]]) -> str:
    if not path:
        return 'root'
    return '/'.join(str(step) for step in path)
