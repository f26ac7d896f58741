"""Kernel backend selection.

The compiled kernels are used when the extension built; NCP_PURE_PYTHON=1
forces the pure fallback (useful for benchmarking and for debugging the
kernels themselves).
"""

import os

if os.environ.get("NCP_PURE_PYTHON", "") not in ("", "0"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels_c as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

blocks_cross = _impl.blocks_cross
is_noncrossing = _impl.is_noncrossing
meet_blocks = _impl.meet_blocks
join_blocks = _impl.join_blocks


def backend_name():
    """'compiled' or 'pure-python', whichever is live."""
    return "compiled" if _impl.__name__.endswith("_c") else "pure-python"
