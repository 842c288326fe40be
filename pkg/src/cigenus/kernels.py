"""Backend selection for the series kernels.

The compiled extension is used when it was built; otherwise, or when
``CIGENUS_PURE_PYTHON`` is set to a non-empty value, the pure-Python
kernels are used.  ``BACKEND`` names the active one.
"""

from __future__ import annotations

import os

from . import _pykernels

try:
    if os.environ.get("CIGENUS_PURE_PYTHON"):
        raise ImportError("pure-python backend forced")
    from . import _ckernels as _impl

    BACKEND = "compiled"
except ImportError:
    _impl = _pykernels
    BACKEND = "python"

mul = _impl.mul
recip = _impl.recip
exp = _impl.exp
log = _impl.log


def compiled_available() -> bool:
    try:
        from . import _ckernels  # noqa: F401
    except ImportError:
        return False
    return True
