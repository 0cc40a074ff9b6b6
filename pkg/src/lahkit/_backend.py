"""Select the leader-profile kernel at import time.

The compiled ``_kernels`` extension is used when it imports; otherwise, or
when ``LAHKIT_PURE_PYTHON`` is set to a non-empty value, the pure-Python
walk is used. Inputs beyond the compiled kernel's overflow bound always go
to the Python walk.
"""
import os

from . import _kernels_py

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

if os.environ.get("LAHKIT_PURE_PYTHON"):
    _active = None
else:
    _active = _compiled

BACKEND = "compiled" if _active is not None else "python"


def compiled_available() -> bool:
    return _compiled is not None


def leader_profile(n: int, k: int, weighting: int, r: int) -> dict[int, int]:
    if _active is not None and n <= _kernels_py.KERNEL_MAX_N:
        return _active.leader_profile(n, k, weighting, r)
    return _kernels_py.leader_profile(n, k, weighting, r)
