"""Brute-force reference computations.

Everything here works straight from the definitions: saturated chains are
enumerated one by one, differences are scanned over a padded box, and the
Poincaré polynomial is an explicit product of the windowed series with
prod(t_i - 1).  Only membership and the core types are shared with the fast
paths.
"""

from __future__ import annotations

import itertools

from . import lattice as L
from .poincare import PoincarePolynomial
from .semigroup import Ideal

BOX_BUDGET = 10**4
CHAIN_BUDGET = 10**6


class SearchBudgetExceeded(RuntimeError):
    pass


def _box_guard(lo, hi):
    vol = L.Box(lo, hi).volume
    if vol > BOX_BUDGET:
        raise SearchBudgetExceeded(f"box [{lo}, {hi}] has {vol} cells > {BOX_BUDGET}")


def oracle_element_distance(E: Ideal, a, b):
    """Enumerate every saturated chain from a to b in E.

    Returns ``(length, lengths)`` where ``lengths`` is the set of all chain
    lengths seen; (E4) predicts a singleton.
    """
    a = tuple(a)
    b = tuple(b)
    if a not in E or b not in E or not L.leq(a, b):
        raise ValueError("need members a <= b")
    _box_guard(a, b)
    pts = [p for p in L.box_points(a, b) if p in E]
    above = {p: [q for q in pts if q != p and L.leq(p, q)] for p in pts}
    # q covers p when nothing of E lies strictly between them
    covers = {}
    for p in pts:
        up = above[p]
        covers[p] = [q for q in up if not any(r != q and L.leq(r, q) for r in up)]
    lengths = set()
    count = 0

    def walk(p, depth):
        nonlocal count
        if p == b:
            count += 1
            if count > CHAIN_BUDGET:
                raise SearchBudgetExceeded(f"more than {CHAIN_BUDGET} chains")
            lengths.add(depth)
            return
        for q in covers[p]:
            if L.leq(q, b):
                walk(q, depth + 1)

    walk(a, 0)
    if len(lengths) != 1:
        return None, lengths
    return next(iter(lengths)), lengths


def oracle_difference(E: Ideal, F: Ideal) -> Ideal:
    """E - F by the definition, scanned over [mu^E - mu^F - 1, gamma^E - mu^F + 1]."""
    one = L.ones(E.s)
    lo = L.sub(L.sub(E.mu, F.mu), one)
    hi = L.add(L.sub(E.gamma, F.mu), one)
    _box_guard(lo, hi)
    members = []
    for a in L.box_points(lo, hi):
        top = L.add(L.join(F.gamma, L.sub(E.gamma, a)), one)
        ok = all(L.add(a, f) in E for f in L.box_points(F.mu, top) if f in F)
        if ok:
            members.append(a)
    mu = members[0]
    for p in members:
        mu = tuple(min(x, y) for x, y in zip(mu, p))
    return Ideal(E.parent, mu, hi, [p for p in members if L.leq(mu, p)])


def _piece(E: Ideal, a) -> Ideal:
    """E^a read off a box scan of E."""
    lo = tuple(max(x, m) for x, m in zip(a, E.mu))
    hi = tuple(max(x, g) for x, g in zip(a, E.gamma))
    pts = [p for p in L.box_points(lo, hi) if p in E]
    mu = pts[0]
    for p in pts:
        mu = tuple(min(x, y) for x, y in zip(mu, p))
    return Ideal(E.parent, mu, hi, pts)


def oracle_ideal_distance(F: Ideal, E: Ideal) -> int:
    """dist_F(mu^F, gamma^E) - dist_E(mu^E, gamma^E), both by chain enumeration."""
    outer, _ = oracle_element_distance(F, F.mu, E.gamma)
    inner, _ = oracle_element_distance(E, E.mu, E.gamma)
    return outer - inner


def _brute_local_distance(E: Ideal, a) -> int:
    return oracle_ideal_distance(_piece(E, a), _piece(E, L.add(a, L.ones(E.s))))


def oracle_poincare(E: Ideal) -> PoincarePolynomial:
    """P_E as (windowed L_E) * prod(t_i - 1), truncated to [mu^E, gamma^E]."""
    s = E.s
    lo = tuple(x - 2 for x in E.mu)
    hi = tuple(x + 1 for x in E.gamma)
    _box_guard(lo, hi)
    series = PoincarePolynomial(s, {p: _brute_local_distance(E, p) for p in L.box_points(lo, hi)})
    factor = PoincarePolynomial(s, {L.zero(s): 1})
    for i in range(s):
        factor = factor * PoincarePolynomial(s, {L.unit(s, i): 1, L.zero(s): -1})
    full = series * factor
    kept = {e: c for e, c in full.terms.items() if L.leq(E.mu, e) and L.leq(e, E.gamma)}
    return PoincarePolynomial(s, kept)


def oracle_delta(E: Ideal, a, i, closed=True):
    """Δ-set emptiness by scanning a finite box of candidate members."""
    s = E.s
    lo = tuple(a[k] if (k == i or closed) else a[k] + 1 for k in range(s))
    hi = tuple(a[i] if k == i else max(lo[k], E.gamma[k]) for k in range(s))
    return any(q in E for q in L.box_points(lo, hi))


def oracle_canonical(S) -> set:
    """Members of K0 in [-1, gamma + 1] straight from {a : Δ^S(tau - a) = ∅}."""
    one = L.ones(S.s)
    tau = L.sub(S.gamma, one)
    out = set()
    for a in L.box_points(L.neg(one), L.add(S.gamma, one)):
        t = L.sub(tau, a)
        if not any(oracle_delta(S, t, i, closed=False) for i in range(S.s)):
            out.add(a)
    return out


def oracle_numerical(gens, limit: int = 200) -> set:
    """Elements of the numerical semigroup below ``limit``, by closure."""
    elems = {0}
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = x + g
            if y < limit and y not in elems:
                elems.add(y)
                frontier.append(y)
    return elems


def oracle_good_numerical(max_conductor: int) -> list:
    """All numerical semigroups with conductor <= max_conductor, via subsets of gaps."""
    out = []
    for c in range(max_conductor + 1):
        inner = range(1, c - 1) if c >= 2 else range(0)
        for bits in itertools.product((0, 1), repeat=len(inner)):
            elems = {0} | {x for x, b in zip(inner, bits) if b} | set(range(c, 3 * c + 3))
            if c >= 1 and c - 1 in elems:
                continue
            if c == 1:
                continue
            closed = all(x + y in elems or x + y >= 3 * c + 3 for x in elems for y in elems)
            if closed:
                out.append(sorted(x for x in elems if x <= c))
    return out


def oracle_axioms(E: Ideal, parent=None, pad: int = 2) -> set:
    """Axioms violated by E, checked pointwise on the box [mu, gamma + pad].

    Returns a subset of {"E1", "E2", "ideal-closure"}.  (E2) witnesses are
    looked for in [mu, gamma + pad + 1]; sums for the ideal condition use
    parent elements in [0, gamma^E - mu^E + gamma^S + pad].
    """
    s = E.s
    hi = tuple(g + pad for g in E.gamma)
    pts = [p for p in L.box_points(E.mu, hi) if p in E]
    wide = [p for p in L.box_points(E.mu, tuple(x + 1 for x in hi)) if p in E]
    bad = set()
    for a, b in itertools.combinations(pts, 2):
        m = tuple(min(x, y) for x, y in zip(a, b))
        if m not in E:
            bad.add("E1")
        for j in range(s):
            if a[j] != b[j]:
                continue
            found = False
            for e in wide:
                if e[j] <= a[j]:
                    continue
                if all(e[k] == min(a[k], b[k]) if a[k] != b[k] else e[k] >= a[k]
                       for k in range(s) if k != j):
                    found = True
                    break
            if not found:
                bad.add("E2")
    if parent is not None:
        top = tuple(g - m + c + pad for g, m, c in zip(E.gamma, E.mu, parent.gamma))
        gens = [q for q in L.box_points(L.zero(s), top) if q in parent]
        if any(tuple(x + y for x, y in zip(p, q)) not in E for p in pts for q in gens):
            bad.add("ideal-closure")
    return bad
