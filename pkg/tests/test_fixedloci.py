from __future__ import annotations

from collections import Counter

import pytest

from terminvar.algebra import CONTINUUM
from terminvar.fixedloci import (
    CURVE,
    PUNCTUAL,
    TRIPLE,
    KummerPoint,
    fix_on_A,
    fixed_loci_row,
    fixed_points_on_K2,
    stabilizer_census,
)
from terminvar.invariants import element_tags
from terminvar.tables import FIXED_LOCI_TABLE

from .conftest import catalog, linear

G0_MODEL = {r.g0: r.model for r in FIXED_LOCI_TABLE}
G0_SYMBOLS = {"C2": ("g2",), "C3": ("g3",), "C4": ("g4",), "C6": ("g6",), "BT24": ("r", "t")}


@pytest.mark.parametrize("row", FIXED_LOCI_TABLE, ids=[r.g0 for r in FIXED_LOCI_TABLE])
def test_fixed_loci_table(row):
    got = fixed_loci_row(linear(row.model, *G0_SYMBOLS[row.g0]))
    assert (got.surfaces, got.points) == (row.surfaces, row.points)
    assert got.split == dict(row.split)


def test_minus_identity_point_types():
    (g,) = [e for e in linear("generic", "g2").elements if not e.is_identity()]
    loc = fixed_points_on_K2(g)
    kinds = Counter(z.variant for z in loc.points)
    # 3x = 0 and 2x = 0 force x = 0: one punctual m^2, no eigenline points since -id is scalar
    assert kinds[PUNCTUAL] == 1
    assert len(loc.surfaces) == 1


def test_identity_rejected():
    (e,) = [x for x in linear("generic", "g2").elements if x.is_identity()]
    with pytest.raises(ValueError):
        fixed_points_on_K2(e)
    assert fix_on_A(e) is CONTINUUM


def test_points_are_fixed():
    for g in linear("e2-zeta6", "g6").elements:
        if g.is_identity():
            continue
        for z in fixed_points_on_K2(g).points:
            assert z.transform(g) == z


def test_points_lie_on_kummer_fiber():
    g = catalog("k2/216,153")
    for r in stabilizer_census(g).reports:
        z = r.point
        total = z.support[0] + z.support[1] + z.support[2]
        assert total.is_zero()


def test_kummer_point_validation():
    (g,) = [e for e in linear("generic", "g2").elements if not e.is_identity()]
    z = fixed_points_on_K2(g).points[0]
    with pytest.raises(ValueError):
        KummerPoint(TRIPLE, (z.support[0], z.support[0], z.support[0]))


def test_twenty_seven_point_lemma(g216):
    tags = element_tags(g216)
    checked = 0
    for i in range(g216.order):
        g = g216.element(i)
        if g216.table.orders[i] != 3 or tags[i] != 0 or g.is_translation():
            continue
        kinds = Counter(z.variant for z in fixed_points_on_K2(g).points)
        assert kinds == Counter({TRIPLE: 9, CURVE: 18})
        checked += 1
    assert checked > 0


def test_orbit_counts_216_153(g216):
    counts = stabilizer_census(g216).orbit_counts()
    assert counts[("4,1", (), "")] == 3
    assert counts[("3,1", (), "translation")] == 1
    assert counts[("3,1", (), "non-linear")] == 9
    assert counts[("24,3", ("A2",), "")] == 2
    assert counts[("9,2", ("A2", "A2"), "")] == 1
    assert counts[("18,3", ("A1", "A2"), "")] == 1


@pytest.mark.parametrize("key", ["2,1", "6,1", "6,2", "54,5", "24,3", "216,153", "8,4", "12,1"])
def test_orbit_stabilizer(key):
    g = catalog(f"k2/{key}")
    c = stabilizer_census(g)
    for r in c.reports:
        assert r.orbit_size * r.stabilizer.order == g.order


@pytest.mark.parametrize("key", ["6,2", "24,3"])
def test_census_orbits_partition_candidates(key):
    c = stabilizer_census(catalog(f"k2/{key}"))
    cands = sorted({z for loc in c.loci.values() for z in loc.points})
    everything = {row.tobytes() for z in cands for row in c.codec.images(z)}
    orbits = [{row.tobytes() for row in c.codec.images(r.point)} for r in c.reports]
    assert sum(len(o) for o in orbits) == len(everything)
    assert set().union(*orbits) == everything
    assert [len(o) for o in orbits] == [r.orbit_size for r in c.reports]
