"""Backend selection for the hot kernels.

The compiled extension is used when it imports; otherwise, or when
``BRIDGE_CENSUS_PURE_PYTHON`` is set to a non-empty value, the pure-Python
implementation is used.  Both expose ``census_length`` and ``k_row``.
"""

import os

from . import _kernels_py

if os.environ.get("BRIDGE_CENSUS_PURE_PYTHON"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

census_length = _impl.census_length
k_row = _impl.k_row

__all__ = ["BACKEND", "census_length", "k_row"]
