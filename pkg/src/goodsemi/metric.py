"""Distances inside an ideal and between nested ideals.

All distances are counted along unit-step chains in the lattice: a step
``p -> p + e_i`` contributes one exactly when the closed Δ-set of the ideal at
``p`` along ``i`` is nonempty.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import lattice as L
from .idealops import is_subset
from .semigroup import Ideal, InternalError, delta_nonempty


class NotContained(ValueError):
    pass


def _count(E: Ideal, steps) -> int:
    return sum(1 for p, i in steps if delta_nonempty(E, p, i, True)[0])


def filtration_distance(E: Ideal, a, b, policy: str = "axis") -> int:
    """dist(E^a \\ E^b) for a <= b; a and b need not lie in E."""
    a = L.point(a, E.s)
    b = L.point(b, E.s)
    return _count(E, L.unit_chain(a, b, policy))


def lattice_distance(a, b) -> int:
    """dist(D^a \\ D^b) for the whole lattice: every unit step counts."""
    return L.norm1(a, b)


def element_distance(E: Ideal, a, b, policy: str = "axis") -> int:
    """Length of any saturated chain from a to b inside E."""
    a = L.point(a, E.s)
    b = L.point(b, E.s)
    if a not in E:
        raise ValueError(f"{a} is not a member")
    if b not in E:
        raise ValueError(f"{b} is not a member")
    if not L.leq(a, b):
        raise ValueError(f"{a} is not <= {b}")
    return filtration_distance(E, a, b, policy)


def ideal_distance(F: Ideal, E: Ideal, policy: str = "axis") -> int:
    """dist(F \\ E) for E ⊆ F, counted along mu^F -> mu^E -> gamma^E."""
    if not is_subset(E, F):
        raise NotContained("the inner ideal is not contained in the outer one")
    head = L.unit_chain(F.mu, E.mu, policy)
    tail = L.unit_chain(E.mu, E.gamma, policy)
    return _count(F, head) + _count(F, tail) - _count(E, tail)


def equals(E: Ideal, F: Ideal) -> bool:
    """Equality of E ⊆ F decided by dist(F \\ E) = 0."""
    by_distance = ideal_distance(F, E) == 0
    if by_distance != (E == F):
        raise InternalError(f"distance test says {by_distance} for {E} and {F}")
    return by_distance


@dataclass(frozen=True)
class ChainCertificate:
    points: tuple

    def __len__(self):
        return len(self.points) - 1

    def check(self, E: Ideal) -> bool:
        """Members of E, strictly increasing, consecutive in E."""
        pts = self.points
        if any(p not in E for p in pts):
            return False
        for p, q in zip(pts, pts[1:]):
            if not L.lt(p, q):
                return False
            if any(x not in (p, q) for x in E.members(p, q)):
                return False
        return True


def saturated_chain(E: Ideal, a, b) -> ChainCertificate:
    """A saturated chain from a to b in E, built by always stepping to a minimal
    member strictly above the current point."""
    a = L.point(a, E.s)
    b = L.point(b, E.s)
    if a not in E or b not in E or not L.leq(a, b):
        raise ValueError("need members a <= b")
    pts = [a]
    cur = a
    while cur != b:
        above = [p for p in E.members(cur, b) if p != cur]
        nxt = min(above, key=sum)
        pts.append(nxt)
        cur = nxt
    return ChainCertificate(tuple(pts))
