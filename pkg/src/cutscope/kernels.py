"""Kernel backend chosen at import time.

The compiled extension is used when it was built; otherwise, or when
``CUTSCOPE_PURE_PYTHON`` is set to a non-empty value, the pure-Python
implementations take over. Both expose ``rank_mod_p`` and ``minimal_mask``.
"""

from __future__ import annotations

import importlib
import os
from types import ModuleType

from . import _kernels_py


def _load_compiled() -> ModuleType | None:
    try:
        return importlib.import_module("cutscope._kernels")
    except ImportError:
        return None


def get_backend(name: str) -> ModuleType:
    if name == "python":
        return _kernels_py
    if name == "cython":
        mod = _load_compiled()
        if mod is None:
            raise ImportError("compiled kernels are not built (pip install -e . --no-build-isolation)")
        return mod
    raise ValueError(f"unknown kernel backend {name!r}")


_compiled = None if os.environ.get("CUTSCOPE_PURE_PYTHON") else _load_compiled()
_impl = _compiled if _compiled is not None else _kernels_py
BACKEND = "cython" if _compiled is not None else "python"

rank_mod_p = _impl.rank_mod_p
minimal_mask = _impl.minimal_mask
