"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line that is printed in the pytest terminal
summary.  Running this file directly prints the same lines.

The universe: s in {1, 2}, gamma^S <= (2, 2) (gamma^S <= 2 for s = 1) and
mu^E in [-2, 2]^s, which forces gamma^E <= gamma^S + (2, 2).
"""

import itertools
import random
import time

import numpy as np
import pytest

from goodsemi import formats
from goodsemi import lattice as L
from goodsemi.catalog import enumerate_good, enumerate_ideals, hunt_cor26, node, numerical, product
from goodsemi.cli import main
from goodsemi.duality import (
    distance_bound_holds,
    dual,
    exclusion_violations,
    symmetry_report,
)
from goodsemi.idealops import as_ideal, difference, filtration, is_subset, translate
from goodsemi.metric import element_distance, equals, filtration_distance, ideal_distance
from goodsemi.oracle import (
    oracle_difference,
    oracle_element_distance,
    oracle_poincare,
)
from goodsemi.poincare import PoincarePolynomial, check_symmetry_theorem, coefficient_table, poincare_polynomial
from goodsemi.semigroup import delta_nonempty

RESULTS = {}


def record(n, ok, detail):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} - {detail}"
    RESULTS[n] = line
    print(line)
    assert ok, line


def build_universe():
    out = []
    for s, gmax in ((1, (2,)), (2, (2, 2))):
        for S in enumerate_good(s, gmax):
            for E in enumerate_ideals(S, L.Box((-2,) * s, (2,) * s)):
                out.append((S, E))
    return out


@pytest.fixture(scope="module")
def universe():
    return build_universe()


def by_parent(universe):
    groups = {}
    for S, E in universe:
        groups.setdefault(S, []).append(E)
    return groups


def test_criterion_1_flagship_values():
    def P(s, items):
        return PoincarePolynomial.from_list(s, items)

    S345 = numerical([3, 4, 5])
    M = filtration(as_ideal(S345), (3,))
    S23 = numerical([2, 3])
    cases = [
        ("P<2,3>", lambda: as_ideal(S23), P(1, [((0,), -1), ((1,), 1), ((2,), -1)])),
        ("P_node", lambda: as_ideal(node()), P(2, [((0, 0), -1), ((1, 1), 1)])),
        ("P_M", lambda: M, P(1, [((3,), -1)])),
        ("P_(K-M)", lambda: dual(S345, M), P(1, [((0,), -1)])),
        ("P_(<2,3>x<2,3>)", lambda: as_ideal(product(S23, S23)), PoincarePolynomial(2)),
    ]
    bad = []
    slowest = 0.0
    for name, make, want in cases:
        t = time.perf_counter()
        got = poincare_polynomial(make())
        dt = time.perf_counter() - t
        slowest = max(slowest, dt)
        if got != want or dt >= 1.0 or oracle_poincare(make()) != want:
            bad.append(f"{name}={got} in {dt:.3f}s")
    record(1, not bad, f"5 exact values, slowest {slowest:.3f}s" + (f"; {bad}" if bad else ""))


def test_criterion_2_symmetry_identity(universe):
    t = time.perf_counter()
    applicable = failures = 0
    for S, E in universe:
        holds, rep = check_symmetry_theorem(S, E)
        if rep.all_true:
            applicable += 1
            D = dual(S, E)
            # coefficientwise: c_(K-E)(a) = (-1)^(s+1) c_E(gamma - a)
            pE, pD = poincare_polynomial(E), poincare_polynomial(D)
            sign = 1 if S.s % 2 else -1
            box = L.Box(L.sub(S.gamma, E.gamma), L.sub(S.gamma, E.mu))
            if not holds or any(pD[a] != sign * pE[L.sub(S.gamma, a)] for a in box):
                failures += 1
    dt = time.perf_counter() - t
    record(2, failures == 0 and dt < 300,
           f"{applicable}/{len(universe)} pairs with all conditions true, {failures} identity failures, {dt:.1f}s")


def test_criterion_3_duality_involution(universe):
    bad = 0
    for S, E in universe:
        D = dual(S, E)
        DD = dual(S, D)
        if not equals(DD, E):
            bad += 1
        if D.mu != L.sub(S.gamma, E.gamma) or D.gamma != L.sub(S.gamma, E.mu):
            bad += 1
        if DD.mu != L.sub(S.gamma, D.gamma) or DD.gamma != L.sub(S.gamma, D.mu):
            bad += 1
    record(3, bad == 0, f"{len(universe)} double duals, {bad} failures")


def test_criterion_4_distance_laws(universe):
    unit_bad = 0
    for _, E in universe:
        one = L.ones(E.s)
        for a in L.box_points(L.sub(E.mu, one), L.add(E.gamma, one)):
            for i in range(E.s):
                d = filtration_distance(E, a, L.add(a, L.unit(E.s, i)))
                if d not in (0, 1) or (d == 1) != delta_nonempty(E, a, i, True)[0]:
                    unit_bad += 1
    groups = by_parent(universe)
    # comparable pairs: distance 0 exactly when equal
    pairs = zero_bad = 0
    comparable = {}
    for S, ideals in groups.items():
        for E, F in itertools.product(ideals, repeat=2):
            if is_subset(E, F):
                pairs += 1
                comparable.setdefault((S, F), []).append(E)
                if (ideal_distance(F, E) == 0) != (E == F):
                    zero_bad += 1
    rng = random.Random(7)
    triples = add_bad = 0
    keys = sorted(comparable, key=lambda k: (k[0].s, k[0].gamma, k[0].sorted_small(), k[1].mu, k[1].sorted_small()))
    attempts = 0
    while triples < 200 and attempts < 100000:
        attempts += 1
        S, G = rng.choice(keys)
        F = rng.choice(comparable[(S, G)])
        inner = comparable.get((S, F))
        if not inner:
            continue
        E = rng.choice(inner)
        triples += 1
        if ideal_distance(G, E) != ideal_distance(G, F) + ideal_distance(F, E):
            add_bad += 1
    ok = unit_bad == 0 and zero_bad == 0 and add_bad == 0 and triples >= 100
    record(4, ok, f"unit steps bad={unit_bad}; {triples} nested triples, additivity bad={add_bad}; "
                  f"{pairs} comparable pairs, zero-distance bad={zero_bad}")


def test_criterion_5_chain_uniqueness(universe):
    rng = random.Random(11)
    bad = checked = 0
    for _, E in universe:
        pts = E.members(E.mu, L.add(E.gamma, L.ones(E.s)))
        for _ in range(50):
            a = rng.choice(pts)
            b = rng.choice([q for q in pts if L.leq(a, q)])
            n, lengths = oracle_element_distance(E, a, b)
            checked += 1
            if len(lengths) != 1 or n != element_distance(E, a, b):
                bad += 1
    record(5, bad == 0, f"{checked} element pairs over {len(universe)} ideals, {bad} non-unique")


def test_criterion_6_support(universe):
    bad = 0
    for _, E in universe:
        lo, c = coefficient_table(E, margin=2)
        for idx in zip(*np.nonzero(c)):
            exp = tuple(int(k) + l for k, l in zip(idx, lo))
            if not (L.leq(E.mu, exp) and L.leq(exp, E.gamma)):
                bad += 1
    record(6, bad == 0, f"{len(universe)} ideals, {bad} nonzero coefficients on the margin ring")


def test_criterion_7_condition_consistency(universe):
    rng = random.Random(13)
    inconsistent = excl = bound = windows = 0
    for S, E in universe:
        D = dual(S, E)
        rep = symmetry_report(S, E, D)
        if not rep.consistent:
            inconsistent += 1
        one = L.ones(S.s)
        lo, hi = L.sub(E.mu, one), L.add(E.gamma, one)
        excl += len(exclusion_violations(S, E, lo, hi, D))
        for _ in range(10):
            a = tuple(rng.randint(x, y) for x, y in zip(lo, hi))
            b = tuple(rng.randint(x, y + 1) for x, y in zip(a, hi))
            windows += 1
            if not distance_bound_holds(S, E, a, b, D):
                bound += 1
    ok = inconsistent == excl == bound == 0
    record(7, ok, f"{len(universe)} pairs, inconsistent={inconsistent}; "
                  f"implication failures={excl}; {windows} windows, inequality failures={bound}")


def test_criterion_8_oracle_equivalence(universe):
    rng = random.Random(17)
    groups = by_parent(universe)
    parents = sorted(groups, key=lambda S: (S.s, S.gamma, S.sorted_small()))
    n = 250
    diff_bad = dist_bad = poly_bad = 0
    for _ in range(n):
        S = rng.choice(parents)
        E, F = rng.choice(groups[S]), rng.choice(groups[S])
        if difference(E, F) != oracle_difference(E, F):
            diff_bad += 1
    for _ in range(n):
        S, E = rng.choice(universe)
        pts = E.members(E.mu, L.add(E.gamma, L.ones(E.s)))
        a = rng.choice(pts)
        b = rng.choice([q for q in pts if L.leq(a, q)])
        if element_distance(E, a, b) != oracle_element_distance(E, a, b)[0]:
            dist_bad += 1
    for S, E in rng.sample(universe, n):
        if poincare_polynomial(E) != oracle_poincare(E):
            poly_bad += 1
    ok = diff_bad == dist_bad == poly_bad == 0
    record(8, ok, f"{n} instances each: difference bad={diff_bad}, "
                  f"element distance bad={dist_bad}, poincare bad={poly_bad}")


def test_criterion_9_hunt_determinism(tmp_path):
    args = ["search", "--s", "2", "--gamma-max", "2,2", "--mu-box=-1,-1,1,1"]
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    codes = [main(args + ["--out", str(a)]), main(args + ["--out", str(b)])]
    same = a.read_bytes() == b.read_bytes()
    report = formats.load(a).payload
    hunt = hunt_cor26(2, (2, 2), L.Box((-1, -1), (1, 1)))
    refail = all(not symmetry_report(S, E).all_true for S, E, _ in hunt.failures)
    ok = same and refail and report["tested"] == hunt.tested and len(report["failures"]) == len(hunt.failures)
    ok = ok and set(codes) == {0 if not hunt.failures else 1}
    record(9, ok, f"byte-identical={same}; tested={report['tested']}, "
                  f"failures={len(hunt.failures)}, all re-fail on recheck={refail}")


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-s"]))
