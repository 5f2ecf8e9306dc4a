"""Kernel selection.

The compiled extension ``_ckernels`` is used when it imports; otherwise the
numpy implementations in ``_kernels_py`` are used.  Setting
``UNITGROUPS_PURE_PYTHON=1`` forces the fallback.
"""

import os

from . import _kernels_py

BACKEND = "python"

if os.environ.get("UNITGROUPS_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl

        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _kernels_py
else:
    _impl = _kernels_py

digit_add = _impl.digit_add
distributive_table = _impl.distributive_table
unit_mask = _impl.unit_mask
radical_mask = _impl.radical_mask
element_orders = _impl.element_orders
closure = _impl.closure

__all__ = [
    "BACKEND",
    "digit_add",
    "distributive_table",
    "unit_mask",
    "radical_mask",
    "element_orders",
    "closure",
]
