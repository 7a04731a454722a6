from __future__ import annotations

import pytest

from terminvar.catalogue import same_group
from terminvar.groups import SizeCapExceeded
from terminvar.hilb import PermGroup, hilb_invariants
from terminvar.tables import hilb_table

ROWS = hilb_table()


def _record(row):
    return hilb_invariants(PermGroup.from_cycles(row.generators, row.degree), row.rank, row.gid)


def test_fixture_size():
    assert len(ROWS) >= 35
    assert all(r.generators for r in ROWS)


@pytest.mark.parametrize("row", ROWS, ids=[f"{r.gid}:{r.alias}" for r in ROWS])
def test_hilb_row(row):
    rec = _record(row)
    assert PermGroup.from_cycles(row.generators, row.degree).order == int(row.gid.split(",")[0])
    assert (rec.N2, rec.b2) == (row.N2, row.b2)
    assert same_group(rec.pi1, row.pi1)


def test_named_examples():
    by_alias = {r.alias: r for r in ROWS}
    assert _record(by_alias["C2^4"]).b2 == 23
    assert _record(by_alias["Q16"]).pi1.catalogue_id == "8,3"


def test_odd_order_rejected():
    with pytest.raises(ValueError):
        hilb_invariants(PermGroup.from_cycles(["(1,2,3)"], 3), 1)


def test_perm_cap(monkeypatch):
    monkeypatch.setenv("TERMINVAR_PERM_CAP", "10")
    g = PermGroup.from_cycles(["(1,2,3,4)", "(1,2)"], 4)
    with pytest.raises(SizeCapExceeded):
        _ = g.table
