"""Kernel backend selection: compiled extension if built, else pure Python.

Set ``NOMVOTE_PURE=1`` to force the pure-Python kernels even when the
extension is available.
"""

from __future__ import annotations

import os

from . import _purepy

try:
    from . import _core
except ImportError:  # extension not built
    _core = None


def compiled_available() -> bool:
    return _core is not None


def using_compiled() -> bool:
    if os.environ.get("NOMVOTE_PURE"):
        return False
    return _core is not None


def active():
    """The module providing option_masks / pair_reach / scan_obvious."""
    return _core if using_compiled() else _purepy


def backend_name() -> str:
    return "compiled" if using_compiled() else "pure"
