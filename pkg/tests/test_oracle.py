"""The brute-force oracles themselves, on cases small enough to check by hand."""

from goodsemi import lattice as L
from goodsemi.idealops import as_ideal, difference, orthant
from goodsemi.oracle import (
    oracle_axioms,
    oracle_canonical,
    oracle_delta,
    oracle_difference,
    oracle_element_distance,
    oracle_ideal_distance,
    oracle_poincare,
)
from goodsemi.poincare import PoincarePolynomial
from goodsemi.semigroup import Ideal


def test_chain_oracle_examples(N, S23):
    assert oracle_element_distance(as_ideal(N), (0, 0), (1, 1)) == (1, {1})
    assert oracle_element_distance(as_ideal(N), (0, 0), (2, 2)) == (3, {3})
    assert oracle_element_distance(as_ideal(S23), (0,), (5,)) == (4, {4})


def test_difference_oracle(S345, K345):
    S = as_ideal(S345)
    assert oracle_difference(K345, K345) == S
    assert oracle_difference(S, S) == S
    assert oracle_difference(orthant(S345, (0,)), K345) == difference(orthant(S345, (0,)), K345)


def test_distance_oracle(S345, K345):
    assert oracle_ideal_distance(orthant(S345, (0,)), as_ideal(S345)) == 2
    assert oracle_ideal_distance(K345, as_ideal(S345)) == 1


def test_poincare_oracle(S23, N):
    assert oracle_poincare(as_ideal(S23)) == PoincarePolynomial.from_list(1, [((0,), -1), ((1,), 1), ((2,), -1)])
    assert oracle_poincare(as_ideal(N)) == PoincarePolynomial.from_list(2, [((0, 0), -1), ((1, 1), 1)])


def test_delta_and_canonical_oracles(S345, N):
    assert oracle_delta(as_ideal(N), (0, 0), 0, closed=False) is False
    assert oracle_delta(as_ideal(N), (1, 0), 0, closed=True) is True
    assert oracle_canonical(S345) == {(0,), (1,), (3,), (4,)}


def test_axioms_oracle_flags_bad_sets(S23, N):
    # missing meet (0, 0) of (0, 1) and (1, 0)
    bad = Ideal(N, (0, 0), (1, 1), [(0, 1), (1, 0), (1, 1)])
    assert "E1" in oracle_axioms(bad)
    # {1} + [3, oo) is an ideal of <2, 3>; {1} + [4, oo) misses 1 + 2
    assert oracle_axioms(Ideal(S23, (1,), (3,), [(1,), (3,)]), S23) == set()
    assert "ideal-closure" in oracle_axioms(Ideal(S23, (1,), (4,), [(1,), (4,)]), S23)
