"""Kernel selection: the compiled extension when importable, else numpy.

Set ``TERMINVAR_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

import numpy as np

from . import _kernels_py

BACKEND = "python"
_impl = _kernels_py
if os.environ.get("TERMINVAR_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py


def closure_bfs(table: np.ndarray, gens, identity: int) -> np.ndarray:
    return _impl.closure_bfs(np.ascontiguousarray(table, dtype=np.int64), gens, int(identity))


def class_labels(conj: np.ndarray) -> np.ndarray:
    return _impl.class_labels(np.ascontiguousarray(conj, dtype=np.int64))


def orbit_labels(perms: np.ndarray) -> np.ndarray:
    return _impl.orbit_labels(np.ascontiguousarray(perms, dtype=np.int64))
