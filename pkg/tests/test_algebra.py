from __future__ import annotations

from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from terminvar.algebra import (
    CONTINUUM,
    I_UNIT,
    ZETA3,
    ZETA6,
    Cyc,
    IntMatrix,
    TorusPoint,
    det,
    exterior_square,
    fixed_subspace_rank,
    format_rational,
    rank_q,
    smith_normal_form,
    solve_congruence,
)

small = st.integers(-4, 4)
mat4 = st.lists(st.lists(small, min_size=4, max_size=4), min_size=4, max_size=4).map(IntMatrix.of)
rat = st.fractions(min_value=-3, max_value=3, max_denominator=6)
cyc = st.tuples(rat, rat, rat, rat).map(lambda c: Cyc.of(*c))


def test_det_small():
    assert det(IntMatrix.of([[2, 1], [7, 4]])) == 1
    assert det(IntMatrix.identity(4).scale(-1)) == 1
    assert det(IntMatrix.of([[1, 2], [2, 4]])) == 0


@given(mat4)
def test_smith_form_is_diagonal_and_equivalent(m):
    snf = smith_normal_form(m)
    assert snf.U @ m @ snf.V == snf.D
    assert abs(det(snf.U)) == 1 and abs(det(snf.V)) == 1
    d = [snf.D[i, i] for i in range(4)]
    for i in range(4):
        for j in range(4):
            if i != j:
                assert snf.D[i, j] == 0
    nz = [x for x in d if x]
    assert all(x > 0 for x in nz)
    for a, b in zip(nz, nz[1:]):
        assert b % a == 0


@given(mat4)
def test_rank_matches_snf(m):
    snf = smith_normal_form(m)
    assert rank_q(m.entries) == sum(1 for i in range(4) if snf.D[i, i])


def test_solve_congruence_counts():
    # 2x = 0 on (Q/Z)^2 has 4 solutions
    sols = solve_congruence(IntMatrix.diag([2, 2]), [0, 0])
    assert len(sols) == 4
    assert TorusPoint((Fraction(1, 2), Fraction(0))) in sols
    assert solve_congruence(IntMatrix.diag([1, 0]), [0, 0]) is CONTINUUM
    assert solve_congruence(IntMatrix.diag([1, 0]), [0, Fraction(1, 2)]) == frozenset()


@given(mat4, st.lists(st.integers(0, 5), min_size=4, max_size=4))
def test_congruence_solutions_solve(m, num):
    rhs = [Fraction(x, 6) for x in num]
    sols = solve_congruence(m, rhs)
    if sols is CONTINUUM:
        return
    if det(m):
        assert len(sols) == abs(det(m)) or len(sols) == 0
    target = TorusPoint(tuple(rhs))
    for x in sols:
        assert TorusPoint(m.apply(x.coords)) == target


def test_exterior_square_of_minus_identity_is_identity():
    assert exterior_square(IntMatrix.identity(4).scale(-1)) == IntMatrix.identity(6)


def test_fixed_subspace_rank():
    assert fixed_subspace_rank([IntMatrix.diag([1, 1, -1, -1])]) == 2
    assert fixed_subspace_rank([], 6) == 6


def test_cyclotomic_units():
    assert ZETA3**3 == Cyc.of(1)
    assert ZETA6**6 == Cyc.of(1)
    assert I_UNIT**2 == Cyc.of(-1)
    assert ZETA6**2 == ZETA3
    assert ZETA3 + ZETA3.conjugate() == Cyc.of(-1)
    assert I_UNIT.conjugate() == -I_UNIT


@given(cyc, cyc, cyc)
def test_cyclotomic_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    if not a.is_zero():
        assert a * a.inverse() == Cyc.of(1)


def test_format_rational():
    assert format_rational(Fraction(166, 3)) == "166/3"
    assert format_rational(Fraction(480)) == "480"


@pytest.mark.parametrize("k", range(12))
def test_zeta_powers_have_expected_order(k):
    z = Cyc.zeta(k)
    order = 12 // gcd(k, 12)
    assert z**order == Cyc.of(1)
    assert all(z**j != Cyc.of(1) for j in range(1, order))
