from __future__ import annotations

import pytest

from terminvar.algebra import IntMatrix
from terminvar.models import G0_GENERATORS, G0_ORDERS, MODEL_NAMES, all_models, build_model, linear_closure

SUPPORT = {
    "generic": {"1", "C2"},
    "e2-i": {"1", "C2", "C4", "Q8"},
    "e2-zeta3": {"1", "C2", "C3"},
    "e2-zeta6": {"1", "C2", "C3", "C6", "BD12"},
    "quaternionic": {"1", "C2", "C3", "C4", "C6", "Q8", "BT24"},
}


@pytest.mark.parametrize("name", MODEL_NAMES)
def test_model_checks(name):
    build_model(name).check()


@pytest.mark.parametrize("name", MODEL_NAMES)
def test_supported_groups(name):
    m = build_model(name)
    assert set(m.g0_names()) >= SUPPORT[name]


@pytest.mark.parametrize("model,g0", [(m, g) for m in MODEL_NAMES for g in SUPPORT[m]])
def test_linear_group_orders(model, g0):
    m = build_model(model)
    lin = linear_closure([m.generator(s) for s in G0_GENERATORS[g0]])
    assert len(lin) == G0_ORDERS[g0]
    for lp in lin:
        assert lp.int_matrix.is_unimodular()


def test_e2_zeta3_rotation_matrix():
    g3 = build_model("e2-zeta3").generator("g3").int_matrix
    assert g3.order() == 3
    assert g3 @ g3 @ g3 == IntMatrix.identity(4)


def test_unknown_model():
    with pytest.raises(KeyError):
        build_model("nope")
    with pytest.raises(KeyError):
        build_model("generic").generator("g3")


def test_all_models():
    assert [m.name for m in all_models()] == list(MODEL_NAMES)
