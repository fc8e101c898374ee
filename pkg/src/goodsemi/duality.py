"""The normalized canonical ideal K0, the dual K0 - E and symmetry conditions.

For a good ideal ``E`` of ``S`` with ``tau = gamma - 1``::

    K0 - E = {a : Δ^E(tau - a) = ∅}

has minimum ``gamma - gamma^E`` and conductor ``gamma - mu^E``; ``K0`` itself
is ``K0 - S``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import lattice as L
from .idealops import as_ideal, filtration, from_box_scan, orthant, translate
from .metric import filtration_distance, ideal_distance, lattice_distance
from .semigroup import (
    VERIFIED,
    GoodSemigroup,
    Ideal,
    InternalError,
    delta_nonempty,
    delta_union_empty,
    validate,
)


def dual(S: GoodSemigroup, E: Ideal) -> Ideal:
    """K0 - E through the Δ-formula.

    The formula is evaluated on the predicted box with a one-cell margin; the
    margin must agree with the representation read off the inner box.
    """
    tau = S.tau
    lo = L.sub(S.gamma, E.gamma)
    hi = L.sub(S.gamma, E.mu)

    def member(a):
        return delta_union_empty(E, L.sub(tau, a), closed=False)

    R = from_box_scan(S, lo, hi, member)
    if R.mu != lo or R.gamma != hi:
        raise InternalError(f"dual has box [{R.mu}, {R.gamma}], expected [{lo}, {hi}]")
    margin = L.Box(lo, hi).expand(1)
    for p in margin:
        if (p in R) != member(p):
            raise InternalError(f"dual representation disagrees with the formula at {p}")
    report = validate(R)
    if not report.passed:
        raise InternalError(f"dual is not good: {report}")
    R.goodness = VERIFIED
    return R


def normalized_canonical(S: GoodSemigroup) -> Ideal:
    """K0 = {a : Δ^S(tau - a) = ∅}."""
    return dual(S, as_ideal(S))


def is_canonical(S: GoodSemigroup, E: Ideal) -> bool:
    """Canonical ideals are exactly the translates of K0."""
    K = normalized_canonical(S)
    return E == translate(K, L.sub(E.gamma, S.gamma))


def check_reflexivity(S: GoodSemigroup, E: Ideal) -> bool:
    from .metric import equals

    DD = dual(S, dual(S, E))
    if not L.leq(DD.mu, E.mu):
        return False
    try:
        return equals(E, DD)
    except ValueError:
        return False


# -- pointwise conditions ----------------------------------------------------

def _closed(E, p, i):
    return delta_nonempty(E, p, i, True)[0]


def _open(E, p, i):
    return delta_nonempty(E, p, i, False)[0]


def lower_window_violations(E, D, tau, lo, hi):
    """Pairs (d, i) in the window where ``Δ̄^E_i(d) ≠ ∅ <=> Δ^D_i(tau-d) = ∅`` fails.

    Ranges over ``lo <= d <= hi`` with ``d + e_i <= hi``.
    """
    bad = []
    for d in L.box_points(lo, hi):
        for i in range(E.s):
            if d[i] + 1 > hi[i]:
                continue
            if _closed(E, d, i) != (not _open(D, L.sub(tau, d), i)):
                bad.append((d, i))
    return bad


def upper_window_violations(E, D, tau, lo, hi):
    """Pairs (d, i) where ``Δ̄^D_i(tau-d) ≠ ∅ <=> Δ^E_i(d) = ∅`` fails.

    Ranges over ``lo <= d <= hi`` with ``d - e_i >= lo``.
    """
    bad = []
    for d in L.box_points(lo, hi):
        for i in range(E.s):
            if d[i] - 1 < lo[i]:
                continue
            if _closed(D, L.sub(tau, d), i) != (not _open(E, d, i)):
                bad.append((d, i))
    return bad


@dataclass
class SymmetryReport:
    cond_i: bool
    cond_ii: bool
    cond_iii: bool
    cond_iv: bool
    violations: list = field(default_factory=list)

    @property
    def conditions(self):
        return (self.cond_i, self.cond_ii, self.cond_iii, self.cond_iv)

    @property
    def all_true(self) -> bool:
        return all(self.conditions)

    @property
    def consistent(self) -> bool:
        return len(set(self.conditions)) == 1


def symmetry_report(S: GoodSemigroup, E: Ideal, D: Ideal | None = None) -> SymmetryReport:
    """Evaluate the four equivalent symmetry conditions independently.

    (i) and (ii) are distance identities, (iii) and (iv) pointwise Δ-set
    equivalences on [mu^E, gamma^E].  A disagreement between the four raises
    :class:`InternalError`.
    """
    if D is None:
        D = dual(S, E)
    g = S.gamma
    mu, gE = E.mu, E.gamma

    # (i): dist(D^mu \ E) = dist((K-E) \ D^(gamma-mu))
    left = ideal_distance(orthant(S, mu), E)
    right = ideal_distance(D, orthant(S, L.sub(g, mu)))
    cond_i = left == right

    # (ii): dist(E \ E^gE) = dist(D^mu \ D^gE) - dist((K-E) \ (K-E)^(gamma-mu))
    lhs = ideal_distance(E, filtration(E, gE))
    rhs = lattice_distance(mu, gE) - ideal_distance(D, filtration(D, L.sub(g, mu)))
    cond_ii = lhs == rhs

    violations = []
    bad3 = lower_window_violations(E, D, S.tau, mu, gE)
    violations += [("iii", d, i) for d, i in bad3]
    bad4 = upper_window_violations(E, D, S.tau, mu, gE)
    violations += [("iv", d, i) for d, i in bad4]
    violations.sort(key=lambda v: (v[0], v[1], v[2]))
    report = SymmetryReport(cond_i, cond_ii, not bad3, not bad4, violations)
    if not report.consistent:
        raise InternalError(f"symmetry conditions disagree for {E}: {report.conditions}")
    return report


def pointwise_equivalence(S: GoodSemigroup, E: Ideal, a, b, D: Ideal | None = None) -> bool:
    """Check the distance identity on the window [a, b] against its pointwise forms.

    The identity is
    ``dist(E^a \\ E^b) = dist(D^a \\ D^b) - dist((K-E)^(gamma-b) \\ (K-E)^(gamma-a))``.
    """
    a = L.point(a, E.s)
    b = L.point(b, E.s)
    if not L.leq(a, b):
        raise ValueError(f"{a} is not <= {b}")
    if D is None:
        D = dual(S, E)
    g = S.gamma
    lhs = filtration_distance(E, a, b)
    rhs = lattice_distance(a, b) - filtration_distance(D, L.sub(g, b), L.sub(g, a))
    by_distance = lhs == rhs
    lower = not lower_window_violations(E, D, S.tau, a, b)
    upper = not upper_window_violations(E, D, S.tau, a, b)
    if not by_distance == lower == upper:
        raise InternalError(f"window [{a}, {b}] of {E}: {by_distance}, {lower}, {upper}")
    return by_distance


def exclusion_violations(S: GoodSemigroup, E: Ideal, lo, hi, D: Ideal | None = None):
    """Points where ``Δ̄^(K-E)_i(tau-a) ≠ ∅`` holds but ``Δ^E_i(a)`` is nonempty."""
    if D is None:
        D = dual(S, E)
    bad = []
    for p in L.box_points(lo, hi):
        for i in range(E.s):
            if _closed(D, L.sub(S.tau, p), i) and _open(E, p, i):
                bad.append((p, i))
    return bad


def distance_bound_holds(S: GoodSemigroup, E: Ideal, a, b, D: Ideal | None = None) -> bool:
    """``dist(E^a \\ E^b) <= n - dist((K-E)^(gamma-b) \\ (K-E)^(gamma-a))``."""
    if D is None:
        D = dual(S, E)
    g = S.gamma
    lhs = filtration_distance(E, a, b)
    rhs = lattice_distance(a, b) - filtration_distance(D, L.sub(g, b), L.sub(g, a))
    return lhs <= rhs
