from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from terminvar.catalogue import entry_by_id, id_for_name, identify, load_catalogue, name_group
from terminvar.groups import (
    SizeCapExceeded,
    TableGroup,
    ambient_group,
    enumerate_subgroups,
    is_isomorphic,
    parse_spec,
    surjects_onto_g0,
    table_from_permutations,
)
from terminvar.invariants import invariant_key

from .conftest import catalog


def test_catalogue_orders_match_witnesses():
    for e in load_catalogue():
        if e.order <= 2000:
            assert e.table.n == e.order, e.id


def test_catalogue_fingerprints_distinct_per_order():
    seen = {}
    for e in load_catalogue():
        key = e.table.fingerprint.key()
        assert key not in seen, (e.id, seen.get(key))
        seen[key] = e.id


def test_names_resolve():
    assert id_for_name("BT24") == "24,3"
    assert id_for_name("Q8") == "8,4"
    assert entry_by_id("216,153") is not None


def _relabel(tg: TableGroup, perm: np.ndarray) -> TableGroup:
    inv = np.argsort(perm)
    t = perm[tg.T[np.ix_(inv, inv)]]
    return TableGroup(t, int(perm[tg.e]))


@pytest.mark.parametrize("gid", ["8,4", "12,1", "24,3", "18,3", "27,3", "27,5", "54,5", "54,13"])
@settings(max_examples=10)
@given(seed=st.integers(0, 2**32 - 1))
def test_identification_survives_relabeling(gid, seed):
    tg = entry_by_id(gid).table
    perm = np.random.default_rng(seed).permutation(tg.n)
    hit = identify(_relabel(tg, perm))
    assert hit is not None and hit.id == gid


def test_nonisomorphic_same_order():
    assert not is_isomorphic(entry_by_id("8,4").table, entry_by_id("8,3").table)
    assert is_isomorphic(entry_by_id("6,1").table, table_from_permutations([[1, 0, 2], [0, 2, 1]]))


def test_s3_name():
    fp = name_group(table_from_permutations([[1, 0, 2], [1, 2, 0]]))
    assert fp.catalogue_id == "6,1"


def test_closure_orders():
    assert catalog("k2/216,153").order == 216
    assert catalog("k2/1944,NA").order == 1944
    assert catalog("k3/32,51").order == 32


def test_group_closed_and_g0():
    g = catalog("k2/54,13")
    assert g.is_closed()
    assert g.g0_name == "C6"
    assert g.order_tr == 9


def test_size_cap(monkeypatch):
    monkeypatch.setenv("TERMINVAR_SIZE_CAP", "100")
    with pytest.raises(SizeCapExceeded):
        ambient_group("generic", "C2", 2)


def test_parse_spec_errors():
    with pytest.raises(ValueError):
        parse_spec({"n": 2})
    with pytest.raises(ValueError):
        parse_spec({"model": "generic", "n": 2, "generators": [{"x": 1}]})
    with pytest.raises(KeyError):
        parse_spec({"model": "generic", "n": 2, "generators": [{"m": "g3"}]})


def test_unsplit_c3_has_no_conjugator():
    from terminvar.groups import affine_split_conjugator

    assert affine_split_conjugator(catalog("k2/3,1#1")) is None
    assert affine_split_conjugator(catalog("k2/3,1#2")) is not None


@pytest.mark.parametrize(
    "model,g0,count", [("generic", "C2", 5), ("e2-i", "C4", 3), ("e2-zeta6", "C6", 6), ("e2-i", "Q8", 3)]
)
def test_enumeration_block_sizes(model, g0, count):
    subs = enumerate_subgroups(ambient_group(model, g0, 2), surjects_onto_g0(g0), invariant_key)
    assert len(subs) == count
    assert all(s.g0_name == g0 for s in subs)
