from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from terminvar import _kernels_py, kernels
from terminvar.groups import ambient_group

try:
    from terminvar import _kernels as _kernels_c
except ImportError:  # pragma: no cover
    _kernels_c = None

needs_ext = pytest.mark.skipif(_kernels_c is None, reason="compiled extension not built")


def test_backend_name():
    assert kernels.BACKEND in ("cython", "python")


@pytest.fixture(scope="module")
def ctx():
    return ambient_group("e2-zeta6", "C6", 2).context


@pytest.fixture(scope="module")
def table(ctx):
    return ctx.table


@needs_ext
@given(st.lists(st.integers(0, 485), min_size=0, max_size=4))
def test_closure_agrees(ctx, gens):
    table = ctx.table
    g = np.array(gens, dtype=np.int64)
    a = _kernels_py.closure_bfs(table, g, ctx.identity_code)
    b = np.asarray(_kernels_c.closure_bfs(table, g, ctx.identity_code), dtype=bool)
    assert np.array_equal(a, b)


@needs_ext
def test_class_labels_agree(ctx):
    codes = np.arange(ctx.size)
    conj = ctx.conj(codes[:, None], codes[None, :])
    a = _kernels_py.class_labels(conj)
    b = np.asarray(_kernels_c.class_labels(conj))
    assert np.array_equal(a, b)
    assert len(np.unique(a)) == len(np.unique(b))


@needs_ext
@given(st.lists(st.permutations(list(range(12))), min_size=1, max_size=3))
def test_orbit_labels_agree(perms):
    arr = np.array(perms, dtype=np.int64)
    assert np.array_equal(_kernels_py.orbit_labels(arr), np.asarray(_kernels_c.orbit_labels(arr)))


def test_orbit_labels_cycle():
    labels = kernels.orbit_labels(np.array([[1, 2, 0, 4, 3, 5]]))
    assert labels.tolist() == [0, 0, 0, 3, 3, 5]


def test_pure_python_fallback_selected_and_agrees():
    import os
    import subprocess
    import sys

    code = (
        "from terminvar import kernels; from terminvar.reports import verify; "
        "print(kernels.BACKEND, len(verify('kummer-n2-sing').mismatches))"
    )
    env = {**os.environ, "TERMINVAR_PURE_PYTHON": "1"}
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["python", "0"]
