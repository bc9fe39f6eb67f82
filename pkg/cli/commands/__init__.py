"""
CLI Commands Package
Centralized registration of every command group
"""

from . import dags, formulas, generate, proofs, stats

COMMAND_GROUPS = [formulas, proofs, generate, dags, stats]

__all__ = [
    'COMMAND_GROUPS',
    'dags',
    'formulas',
    'generate',
    'proofs',
    'stats',
]
