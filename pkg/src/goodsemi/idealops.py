"""Translation, ideal difference, filtration pieces and orthant ideals."""

from __future__ import annotations

from . import lattice as L
from .semigroup import INVALID, VERIFIED, GoodSemigroup, Ideal, classify


class IncompatibleParents(ValueError):
    pass


def _same_parent(E: Ideal, F: Ideal) -> None:
    if E.s != F.s or E.parent.key() != F.parent.key():
        raise IncompatibleParents("ideals live over different semigroups")


def translate(E: Ideal, a) -> Ideal:
    """The ideal a + E."""
    a = L.point(a, E.s)
    small = [L.add(p, a) for p in E.small]
    goodness = E.goodness
    return Ideal(E.parent, L.add(E.mu, a), L.add(E.gamma, a), small, goodness)


def as_ideal(S: GoodSemigroup) -> Ideal:
    """S regarded as an ideal of itself."""
    return Ideal(S, S.mu, S.gamma, S.small, S.goodness)


def orthant(parent: GoodSemigroup, a) -> Ideal:
    """The ideal a + N^s, i.e. the filtration piece D_S^a of the whole lattice."""
    a = L.point(a, parent.s)
    return Ideal(parent, a, a, [a], VERIFIED)


def from_box_scan(parent, lo, hi, member) -> Ideal:
    """Build an ideal from a membership predicate valid on ``[lo, hi]``.

    The caller guarantees that ``hi`` is a conductor point of the set and that
    the set lies in ``lo + N^s``.  The minimum is the meet of all members.
    """
    found = [p for p in L.box_points(lo, hi) if member(p)]
    if not found:
        raise ValueError(f"no members in the box [{lo}, {hi}]")
    mu = L.meet_all(found)
    small = [p for p in found if L.leq(mu, p)]
    if mu not in set(found):
        # not closed under meet; keep the raw points so validation can report it
        small.append(mu)
        return Ideal(parent, mu, hi, small, INVALID)
    return Ideal(parent, mu, hi, small)


def difference(E: Ideal, F: Ideal) -> Ideal:
    """E - F = {a : a + F ⊆ E}.

    Candidates are scanned on ``[mu^E - mu^F, gamma^E - mu^F]``; outside that
    box membership is decided by the conductor.  For a candidate ``a`` only
    ``f`` in ``F ∩ [mu^F, max(gamma^F, gamma^E - a)]`` needs testing, since
    larger coordinates push ``a + f`` past the conductor of E.
    """
    _same_parent(E, F)
    lo = L.sub(E.mu, F.mu)
    hi = L.sub(E.gamma, F.mu)
    window = F.members(F.mu, L.join(F.gamma, L.sub(E.gamma, lo)))

    def member(a):
        for f in window:
            if L.add(a, f) not in E:
                return False
        return True

    R = from_box_scan(E.parent, lo, hi, member)
    if R.goodness != INVALID:
        R.goodness = classify(R)
    return R


def filtration(E: Ideal, a) -> Ideal:
    """The filtration piece E^a = {b in E : b >= a}."""
    a = L.point(a, E.s)
    lo = L.join(a, E.mu)
    hi = L.join(a, E.gamma)
    R = from_box_scan(E.parent, lo, hi, lambda p: p in E)
    R.goodness = classify(R)
    return R


def conductor_ideal(E: Ideal) -> Ideal:
    return filtration(E, E.gamma)


def is_subset(E: Ideal, F: Ideal) -> bool:
    """E ⊆ F, checked on E ∩ [mu^E, max(gamma^E, gamma^F)]."""
    if E.s != F.s:
        raise L.DimensionError("dimension mismatch")
    if not L.leq(F.mu, E.mu):
        return False
    c = L.join(E.gamma, F.gamma)
    return all(p in F for p in E.members(E.mu, c))

