"""Enumeration kernels.

The compiled ``_tree`` extension is used when it was built; otherwise the
pure-Python ``_pytree`` fallback is imported.  Setting ``WEIERLOCI_PURE=1``
forces the fallback.
"""

import os

from . import _pytree

if os.environ.get("WEIERLOCI_PURE", "") not in ("", "0"):
    _impl = _pytree
else:
    try:
        from . import _tree as _impl
    except ImportError:
        _impl = _pytree

BACKEND = "cython" if _impl is not _pytree else "python"
MAX_GENUS = _impl.MAX_GENUS
count_tree = _impl.count_tree
enumerate_tree = _impl.enumerate_tree

__all__ = ["BACKEND", "MAX_GENUS", "count_tree", "enumerate_tree"]
