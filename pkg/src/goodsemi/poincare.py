"""Local distance, Poincaré polynomials and the symmetry identity.

``P_E(t) = sum_a c_E(a) t^a`` with
``c_E(a) = sum_J (-1)^(s - |J|) dist_E(a - e_J)``, and ``c_E`` vanishes
outside ``[mu^E, gamma^E]``.
"""

from __future__ import annotations

import itertools

import numpy as np

from . import lattice as L
from .metric import filtration_distance
from .semigroup import GoodSemigroup, Ideal, InternalError


class PoincarePolynomial:
    """Sparse Laurent polynomial in t1..ts with integer coefficients."""

    __slots__ = ("s", "terms")

    def __init__(self, s: int, terms=None):
        self.s = s
        clean = {}
        for exp, c in (terms or {}).items():
            exp = L.point(exp, s)
            c = int(c)
            if c:
                clean[exp] = clean.get(exp, 0) + c
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def from_list(cls, s, items):
        terms = {}
        for exp, c in items:
            exp = tuple(exp)
            terms[exp] = terms.get(exp, 0) + c
        return cls(s, terms)

    def __getitem__(self, exp) -> int:
        return self.terms.get(tuple(exp), 0)

    def __eq__(self, other):
        if not isinstance(other, PoincarePolynomial):
            return NotImplemented
        return self.s == other.s and self.terms == other.terms

    def __hash__(self):
        return hash((self.s, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return PoincarePolynomial(self.s, out)

    def __neg__(self):
        return PoincarePolynomial(self.s, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return PoincarePolynomial(self.s, {e: c * other for e, c in self.terms.items()})
        out = {}
        for (e1, c1), (e2, c2) in itertools.product(self.terms.items(), other.terms.items()):
            e = L.add(e1, e2)
            out[e] = out.get(e, 0) + c1 * c2
        return PoincarePolynomial(self.s, out)

    __rmul__ = __mul__

    def shift(self, a) -> "PoincarePolynomial":
        return PoincarePolynomial(self.s, {L.add(e, a): c for e, c in self.terms.items()})

    def reflect(self, gamma) -> "PoincarePolynomial":
        """(-1)^(s+1) t^gamma P(1/t)."""
        sign = -1 if self.s % 2 == 0 else 1
        return PoincarePolynomial(self.s, {L.sub(gamma, e): sign * c for e, c in self.terms.items()})

    def sorted_terms(self) -> list:
        """Terms in graded-lexicographic order of exponents."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]))

    def _monomial(self, exp) -> str:
        names = ["t"] if self.s == 1 else [f"t{i + 1}" for i in range(self.s)]
        parts = []
        for name, k in zip(names, exp):
            if k == 0:
                continue
            parts.append(name if k == 1 else f"{name}^{k}")
        return "*".join(parts)

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for exp, c in self.sorted_terms():
            mono = self._monomial(exp)
            mag = abs(c)
            body = mono if mono and mag == 1 else (f"{mag}*{mono}" if mono else str(mag))
            if not out:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(("- " if c < 0 else "+ ") + body)
        return " ".join(out)

    def __repr__(self):
        return f"PoincarePolynomial({self})"


def local_distance(E: Ideal, a, policy: str = "axis") -> int:
    """dist_E(a) = dist(E^a \\ E^(a+1))."""
    a = L.point(a, E.s)
    return filtration_distance(E, a, L.add(a, L.ones(E.s)), policy)


def distance_table(E: Ideal, lo, hi) -> np.ndarray:
    """dist_E over the box [lo, hi] as an int array indexed from ``lo``."""
    box = L.Box(lo, hi)
    table = np.zeros(box.shape, dtype=np.int64)
    for p in box:
        table[tuple(x - l for x, l in zip(p, lo))] = local_distance(E, p)
    return table


def coefficient_table(E: Ideal, margin: int = 2):
    """c_E on [mu - margin, gamma + margin] as ``(lo, array)``."""
    s = E.s
    lo = tuple(x - margin - 1 for x in E.mu)
    hi = tuple(x + margin for x in E.gamma)
    dist = distance_table(E, lo, hi)
    c = np.zeros(tuple(n - 1 for n in dist.shape), dtype=np.int64)
    for J in itertools.product((0, 1), repeat=s):
        sign = -1 if (s - sum(J)) % 2 else 1
        # entry a of c reads dist at a - e_J
        idx = tuple(slice(1 - j, n - j) for j, n in zip(J, dist.shape))
        c += sign * dist[idx]
    return tuple(x + 1 for x in lo), c


def poincare_polynomial(E: Ideal) -> PoincarePolynomial:
    """P_E from the alternating sum of local distances.

    Coefficients are evaluated on the box with a width-2 margin ring, which
    must vanish identically.
    """
    margin = 2
    lo, c = coefficient_table(E, margin)
    terms = {}
    for idx in zip(*np.nonzero(c)):
        exp = tuple(int(k) + l for k, l in zip(idx, lo))
        if not (L.leq(E.mu, exp) and L.leq(exp, E.gamma)):
            raise InternalError(f"nonzero coefficient {c[idx]} at {exp} outside [{E.mu}, {E.gamma}]")
        terms[exp] = int(c[idx])
    return PoincarePolynomial(E.s, terms)


def check_symmetry_theorem(S: GoodSemigroup, E: Ideal):
    """Compare P_(K-E) with (-1)^(s+1) t^gamma P_E(1/t).

    Returns ``(identity_holds, report)``.  When all symmetry conditions hold
    the identity is required, and a mismatch raises :class:`InternalError`.
    """
    from .duality import dual, symmetry_report

    D = dual(S, E)
    report = symmetry_report(S, E, D)
    holds = poincare_polynomial(D) == poincare_polynomial(E).reflect(S.gamma)
    if report.all_true and not holds:
        raise InternalError(f"symmetry identity fails for {E} although the conditions hold")
    return holds, report
