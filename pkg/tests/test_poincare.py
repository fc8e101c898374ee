import random

from hypothesis import given, settings, strategies as st

from goodsemi import lattice as L
from goodsemi.catalog import natural, node, product
from goodsemi.duality import dual, symmetry_report
from goodsemi.idealops import as_ideal, filtration, orthant, translate
from goodsemi.oracle import oracle_poincare
from goodsemi.poincare import (
    PoincarePolynomial,
    check_symmetry_theorem,
    local_distance,
    poincare_polynomial,
)


def P(s, items):
    return PoincarePolynomial.from_list(s, items)


def test_local_distance_examples(N):
    E = as_ideal(N)
    assert local_distance(E, (1, 1)) == 2
    assert local_distance(E, (0, 0)) == 1
    assert local_distance(E, (5, 7)) == 2
    assert local_distance(E, (-3, 0)) == 1
    assert local_distance(E, (-3, -3)) == 0


def test_local_distance_policy_free(universe):
    for _, E in universe:
        for a in L.box_points(L.sub(E.mu, L.ones(E.s)), E.gamma):
            assert {local_distance(E, a, p) for p in L.CHAIN_POLICIES} == {local_distance(E, a)}


def test_flagship_values(S23, N, M, S345, P23):
    assert poincare_polynomial(as_ideal(S23)) == P(1, [((0,), -1), ((1,), 1), ((2,), -1)])
    assert poincare_polynomial(as_ideal(N)) == P(2, [((0, 0), -1), ((1, 1), 1)])
    assert poincare_polynomial(M) == P(1, [((3,), -1)])
    D = dual(S345, M)
    assert D == orthant(S345, (0,))
    assert poincare_polynomial(D) == P(1, [((0,), -1)])
    assert not poincare_polynomial(as_ideal(P23))
    assert not poincare_polynomial(as_ideal(natural(2)))
    assert poincare_polynomial(as_ideal(natural(1))) == P(1, [((0,), -1)])


def test_polynomial_printing(S23, N):
    assert str(poincare_polynomial(as_ideal(S23))) == "-1 + t - t^2"
    assert str(poincare_polynomial(as_ideal(N))) == "-1 + t1*t2"
    assert str(PoincarePolynomial(2)) == "0"
    assert str(P(2, [((2, 0), 3), ((0, 1), -2)])) == "-2*t2 + 3*t1^2"


def test_polynomial_arithmetic():
    a = P(1, [((0,), 1), ((1,), 1)])
    b = P(1, [((1,), 1), ((0,), -1)])
    assert a * b == P(1, [((0,), -1), ((2,), 1)])
    assert a - a == PoincarePolynomial(1)
    assert a.shift((2,)) == P(1, [((2,), 1), ((3,), 1)])
    assert a.reflect((3,)) == P(1, [((3,), 1), ((2,), 1)])
    assert 2 * a == a + a


def test_oracle_agreement(shifted_universe):
    for _, E in shifted_universe:
        assert poincare_polynomial(E) == oracle_poincare(E)


def test_translation_covariance(universe):
    for _, E in universe[::2]:
        base = poincare_polynomial(E)
        for a in ((-2,) * E.s, (1,) + (3,) * (E.s - 1)):
            assert poincare_polynomial(translate(E, a)) == base.shift(a)


def test_support_in_box(shifted_universe):
    for _, E in shifted_universe:
        for exp in poincare_polynomial(E).terms:
            assert L.leq(E.mu, exp) and L.leq(exp, E.gamma)


def test_symmetry_identity(shifted_universe):
    for S, E in shifted_universe:
        holds, rep = check_symmetry_theorem(S, E)
        if rep.all_true:
            assert holds


def test_symmetry_identity_examples(S345, M, N, P23):
    for S, E in ((S345, M), (N, as_ideal(N)), (P23, orthant(P23, (1, 0))), (S345, as_ideal(S345))):
        holds, rep = check_symmetry_theorem(S, E)
        assert rep.all_true and holds


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 4), st.integers(0, 4))
def test_filtration_poincare_support(x, y):
    S = node()
    E = filtration(as_ideal(S), (x, y))
    poly = poincare_polynomial(E)
    assert poly == oracle_poincare(E)
    assert symmetry_report(S, E).consistent
