from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from terminvar.tables import K2_SING_TABLE
from terminvar.topology import topology_n2


def test_smooth_kummer_fourfold():
    t = topology_n2(7, 8, 0, 0, 0)
    assert (t.b4, t.chi) == (108, 108)


@pytest.mark.parametrize("row", K2_SING_TABLE, ids=[r.gid for r in K2_SING_TABLE])
def test_rows(row):
    t = topology_n2(row.b2, 0, row.a2, row.a3, row.a4)
    assert (t.b4, t.chi, t.c4, t.c2sq) == (row.b4, row.chi, row.c4, row.c2sq)


def test_exact_rationals():
    t = topology_n2(8, 0, 36, 13, 0)
    assert t.c4 == Fraction(166, 3)
    assert t.to_dict()["c4"] == "166/3"


@given(st.integers(0, 30), st.integers(0, 8), st.integers(0, 60), st.integers(0, 30), st.integers(0, 10))
def test_poincare_duality_identity(b2, b3, a2, a3, a4):
    t = topology_n2(b2, b3, a2, a3, a4)
    assert t.poincare_ok(b2, b3)


def test_negative_input():
    with pytest.raises(ValueError):
        topology_n2(1, 0, -1, 0, 0)
