from __future__ import annotations

import pytest

from terminvar.catalogue import same_group
from terminvar.invariants import Gate, Tag, bd12_epsilon, invariant_record, qualify
from terminvar.tables import K2_TABLE, K3_SING_TABLE

from .conftest import catalog, linear


@pytest.mark.parametrize("row", K2_TABLE, ids=[r.key for r in K2_TABLE])
def test_k2_row(row):
    g = catalog(f"k2/{row.key}")
    rec = invariant_record(g)
    assert rec.fingerprint.catalogue_id == row.gid
    assert (rec.g0, rec.rank, rec.betti.N2, rec.betti.N3, rec.b2) == (row.g0, row.rank, row.N2, row.N3, row.b2)
    assert same_group(rec.pi1, row.pi1)


@pytest.mark.parametrize("row", K3_SING_TABLE, ids=[r.gid for r in K3_SING_TABLE])
def test_k3_row(row):
    rec = invariant_record(catalog(f"k3/{row.gid}"))
    assert rec.fingerprint.catalogue_id == row.gid
    assert (rec.betti.N2, rec.b2) == (row.N2, row.b2)
    assert rec.betti.N3 == 0


def test_bd12_epsilon_rows():
    assert [bd12_epsilon(catalog(f"k2/{k}")) for k in ("12,1", "108,37", "972,NA")] == [1, 1, 1]
    assert bd12_epsilon(catalog("k2/24,3")) == 0


def test_qualification():
    g2 = linear("generic", "g2").elements
    assert {qualify(e, 2).tag for e in g2 if not e.is_identity()} == {Tag.INVOLUTION}
    # the order-3 rotation on E_zeta3^2 fixes A[3] pointwise only on a sublattice: still qualifying
    g3 = [e for e in linear("e2-zeta3", "g3").elements if not e.is_identity()]
    assert all(qualify(e, 2).tag == Tag.ORDER3 for e in g3)
    # on K_3(A), order-3 elements never give codimension-2 loci
    assert all(qualify(e, 3).tag == Tag.NONE for e in linear("e2-zeta3", "g3", n=3).elements)


def test_translation_c3_is_not_qualifying():
    g = catalog("k2/3,1#1")
    assert invariant_record(g).betti.N3 == 0


def test_gate():
    assert invariant_record(catalog("k2/3,1#1")).gate == Gate.TERMINAL
    assert invariant_record(catalog("k2/2,1")).gate == Gate.STRICTLY_CANONICAL


def test_record_json_fields():
    out = invariant_record(catalog("k2/162,54")).to_json()
    assert out["b2"] == 8 and out["pi1"] == "{1}"
    assert out["order"] == 162
