"""Size guards.

Enumeration-backed operations refuse ground sets beyond a bound so a stray
CLI argument cannot try to materialize NCP(30).  The default covers every
check shipped with the package; NCP_MAX_N overrides it.
"""

import os

from .errors import OutOfRangeError, TooLargeError

DEFAULT_MAX_N = 12

# Caps for the integer coalgebras and the simplicial truncation depth.  These
# are not user-tunable; they just keep desk-scale commands desk-scale.
MAX_INT_BOUND = 100_000
MAX_DEPTH = 4


def max_n():
    """Current enumeration bound (env NCP_MAX_N, else 12)."""
    raw = os.environ.get("NCP_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError:
        raise TooLargeError(f"NCP_MAX_N must be an integer, got {raw!r}") from None


def guard_n(n, what="enumeration"):
    """Raise on ground sets that are negative or beyond the configured bound."""
    if n < 0:
        raise OutOfRangeError(f"{what} needs a ground set size >= 0, got {n}")
    bound = max_n()
    if n > bound:
        raise TooLargeError(f"{what} over [{n}] exceeds the bound {bound} (set NCP_MAX_N to raise it)")
    return n


def guard_int_bound(m):
    if m > MAX_INT_BOUND:
        raise TooLargeError(f"integer bound {m} exceeds the cap {MAX_INT_BOUND}")
    return m


def guard_depth(d):
    if d > MAX_DEPTH:
        raise TooLargeError(f"truncation depth {d} exceeds the cap {MAX_DEPTH}")
    return d
