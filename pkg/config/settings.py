"""
Application configuration and constants
"""

import os
import sys
from pathlib import Path

from dotenv import load_dotenv

# Load environment overrides (MIMP_BUDGET, MIMP_VERBOSE) from a local .env if present
load_dotenv()

# =====================================================
# APPLICATION CONFIGURATION
# =====================================================

APP_CONFIG = {
    'app_name': 'mimp-proofs',
    'version': '1.0.0',
    'description': 'Natural-deduction proofs in minimal implicational logic',
}

# =====================================================
# DIRECTORY PATHS
# =====================================================

PROJECT_ROOT = Path(__file__).parent.parent
GRAMMAR_PATH = PROJECT_ROOT / 'core' / 'mimp.lark'

# =====================================================
# NODE BUDGETS
# =====================================================

DEFAULT_NODE_BUDGET = 10_000_000


def _env_budget() -> int:
    raw = os.getenv('MIMP_BUDGET')
    if not raw:
        return DEFAULT_NODE_BUDGET
    try:
        value = int(raw.replace('_', ''))
    except ValueError:
        print(f"⚠️  Ignoring malformed MIMP_BUDGET={raw!r}", file=sys.stderr)
        return DEFAULT_NODE_BUDGET
    return value if value > 0 else DEFAULT_NODE_BUDGET


BUDGET_CONFIG = {
    'node_budget': _env_budget(),
    'default_node_budget': DEFAULT_NODE_BUDGET,
}

# =====================================================
# REDUNDANCY ANALYSIS
# =====================================================

ANALYSIS_CONFIG = {
    'threshold_factor': 2,      # default threshold = factor * |B(t)|
    'shrink': 0.5,              # support kept while growing a repeated subtree
    'polyfront_exponent': 1,
}

# =====================================================
# HAMILTONIAN ENCODING
# =====================================================

ORACLE_CONFIG = {
    'max_vertices': 12,         # factorial search budget of the oracle
}

ENCODING_CONFIG = {
    'absurdity_atom': 'q',
    'step_atom': 'X_{step}_{vertex}',
    'step_disjunction_atom': 'ORX_{step}',
    'vertex_disjunction_atom': 'ORA_{vertex}',
}

# =====================================================
# TEXT FORMATS
# =====================================================

FORMAT_CONFIG = {
    'eol_header': 'eol 1',
    'dag_header': 'dag 1',
    'root_point': '*',
    'order_separator': ', ',
    'stats_columns': ['n', 'labels', 'nodes', 'height', 'max_occ', 'ratio'],
}

# =====================================================
# STATUS OUTPUT
# =====================================================

LOG_CONFIG = {
    'verbose': os.getenv('MIMP_VERBOSE', '1') not in ('0', 'false', 'no'),
}

# =====================================================
# CLI EXIT CODES
# =====================================================

EXIT_CODES = {
    'ok': 0,
    'input_error': 1,
    'rejected': 2,
    'hamiltonian': 3,
    'budget': 4,
}
