"""
Data Models - Result and record types shared across modules
"""

from collections import Counter
from dataclasses import dataclass, field
from typing import Optional, List, Dict, Tuple, Any

from core.formula import Formula


@dataclass(frozen=True)
class Judgment:
    """Result of checking a derivation: open assumptions ⊢ conclusion"""
    conclusion: Formula
    open_assumptions: Counter = field(default_factory=Counter)

    @property
    def open_set(self) -> frozenset:
        return frozenset(self.open_assumptions)


@dataclass(frozen=True)
class Violation:
    """One failed condition of an EOL-tree"""
    condition: str          # '1'..'9', 'level', 'bitstring', 'dependency'
    node: int
    message: str

    def __str__(self) -> str:
        return f"condition-{self.condition} at node {self.node}: {self.message}"


@dataclass(frozen=True)
class VerifyResult:
    """Outcome of DAG verification; reject carries the first violation"""
    accepted: bool
    reason: Optional[str] = None
    check: Optional[str] = None     # 'acyclicity', 'level', 'rule-shape', ...
    node: Optional[int] = None

    def __bool__(self) -> bool:
        return self.accepted


@dataclass
class CacheStats:
    """Hash-consing table statistics"""
    entries: int = 0
    lookups: int = 0
    hits: int = 0

    @property
    def hit_rate(self) -> float:
        if self.lookups == 0:
            return 0.0
        return self.hits / self.lookups


@dataclass(frozen=True)
class Occurrence:
    """An embedding of a skeletal tree: pattern preorder index -> tree node"""
    root: int
    level: int
    mapping: Tuple[int, ...]


@dataclass
class RepeatedSubtree:
    """A skeletal subtree repeated at one level"""
    level: int
    pattern: Any                    # eoltree.SkeletalTree
    multiplicity: int
    roots: List[int] = field(default_factory=list)


@dataclass
class RedundancyReport:
    """Per-level label multiplicities plus the repeated subtrees found"""
    threshold: int
    histogram: Dict[int, Dict[Formula, int]] = field(default_factory=dict)
    level: Optional[int] = None
    repeated: List[RepeatedSubtree] = field(default_factory=list)

    @property
    def is_empty(self) -> bool:
        return self.level is None


@dataclass(frozen=True)
class FamilyRow:
    """Measurements of one member of a proof family"""
    n: int
    labels: int         # |B|
    nodes: int          # |V|
    height: int
    max_occ: int
    ratio: Optional[float] = None   # |V(n)| / |V(n-1)|


@dataclass
class FamilyStats:
    """Growth table of a proof family"""
    family: str
    rows: List[FamilyRow] = field(default_factory=list)
    growth_exponent: float = 0.0    # least-squares slope of ln|V| against |B|
    step_ratio: Optional[float] = None
