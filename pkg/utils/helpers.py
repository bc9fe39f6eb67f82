# utils/helpers.py
"""
General Utility Functions
Stateless helper functions shared by the core modules and the command line
"""

import sys
from typing import List, Sequence

import numpy as np

from config.settings import LOG_CONFIG


# =============================================================================
# STATUS OUTPUT
# =============================================================================

STATUS_MARKERS = {
    'ok': '✓',
    'warning': '⚠️',
    'error': '❌',
    'info': '',
}


def status(message: str, level: str = 'info'):
    """
    Print a status line to stderr

    Args:
        message: text to print
        level: 'ok', 'warning', 'error' or 'info'; info lines are dropped unless verbose
    """
    if level == 'info' and not LOG_CONFIG['verbose']:
        return
    marker = STATUS_MARKERS.get(level, '')
    line = f"{marker} {message}" if marker else message
    print(line, file=sys.stderr)


# =============================================================================
# NUMBERS
# =============================================================================

def fibonacci(k: int) -> int:
    """Fibonacci(k) with Fibonacci(1) = Fibonacci(2) = 1"""
    if k < 1:
        raise ValueError(f"fibonacci index must be >= 1, got {k}")
    a, b = 1, 1
    for _ in range(k - 1):
        a, b = b, a + b
    return a


def least_squares_slope(xs: Sequence[float], ys: Sequence[float]) -> float:
    """
    Slope of the least-squares line through (xs, ys)

    Returns:
        0.0 when fewer than two distinct x values are given
    """
    if len(xs) != len(ys):
        raise ValueError("xs and ys differ in length")
    x = np.asarray(xs, dtype=float)
    if x.size < 2 or np.ptp(x) == 0:
        return 0.0
    slope, _ = np.polyfit(x, np.asarray(ys, dtype=float), 1)
    return float(slope)


def geometric_mean(values: Sequence[float]) -> float:
    if not len(values):
        raise ValueError("geometric mean of an empty sequence")
    return float(np.exp(np.mean(np.log(values))))


# =============================================================================
# PARSING
# =============================================================================

def parse_range(start: str, stop: str) -> List[int]:
    """
    Inclusive integer range from two command-line strings

    Raises:
        ValueError: non-integer bounds or an empty range
    """
    low, high = int(start), int(stop)
    if low > high:
        raise ValueError(f"empty range {low}..{high}")
    return list(range(low, high + 1))


def split_order_line(text: str) -> List[str]:
    """Split "f1, f2, ..." (optionally prefixed by "order") into formula strings"""
    body = text.strip()
    if body.startswith('order '):
        body = body[len('order '):]
    return [part.strip() for part in body.split(',') if part.strip()]


def bits_to_mask(bits: str) -> int:
    """Leftmost character is bit 0"""
    mask = 0
    for index, char in enumerate(bits):
        if char == '1':
            mask |= 1 << index
        elif char != '0':
            raise ValueError(f"invalid bitstring {bits!r}")
    return mask


def mask_to_bits(mask: int, width: int) -> str:
    return ''.join('1' if (mask >> index) & 1 else '0' for index in range(width))
