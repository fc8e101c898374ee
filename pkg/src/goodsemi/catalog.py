"""Known families, exhaustive enumeration of small instances, and the census
of the symmetry conditions over an enumerated universe."""

from __future__ import annotations

import itertools
import logging
import math
import os
import time
from dataclasses import dataclass, field

from . import lattice as L
from .idealops import translate
from .semigroup import (
    VERIFIED,
    GoodSemigroup,
    Ideal,
    ValidationError,
    make_semigroup,
    validate_good,
)

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**6


class BudgetExceeded(RuntimeError):
    pass


def budget() -> int:
    """Candidate budget for enumerations; ``GOODSEMI_BUDGET`` overrides it."""
    raw = os.environ.get("GOODSEMI_BUDGET")
    return int(raw) if raw else DEFAULT_BUDGET


# -- constructors ------------------------------------------------------------

def numerical(gens) -> GoodSemigroup:
    """The numerical semigroup generated by ``gens``."""
    gens = sorted({int(g) for g in gens})
    if not gens or gens[0] <= 0:
        raise ValueError("generators must be positive integers")
    if math.gcd(*gens) != 1:
        raise ValueError(f"gcd of {gens} is not 1: the semigroup has no conductor")
    # the Frobenius number is below (min - 1) * (max - 1)
    bound = (gens[0] - 1) * (gens[-1] - 1) + 1
    inside = [False] * (bound + 1)
    inside[0] = True
    for n in range(1, bound + 1):
        inside[n] = any(n >= g and inside[n - g] for g in gens)
    gaps = [n for n in range(bound + 1) if not inside[n]]
    c = gaps[-1] + 1 if gaps else 0
    small = [(n,) for n in range(c + 1) if inside[n]]
    return make_semigroup((c,), small)


def product(S1: GoodSemigroup, S2: GoodSemigroup) -> GoodSemigroup:
    if S1.s + S2.s > L.MAX_DIM:
        raise L.DimensionError(f"product would have dimension {S1.s + S2.s} > {L.MAX_DIM}")
    small = [p + q for p in S1.small for q in S2.small]
    return make_semigroup(S1.gamma + S2.gamma, small)


def from_small(s, gamma, small) -> GoodSemigroup:
    """Validate and canonicalize; raises :class:`ValidationError` with the report."""
    gamma = L.point(gamma, s)
    return make_semigroup(gamma, small)


def natural(s: int) -> GoodSemigroup:
    """N^s."""
    return make_semigroup(L.zero(s), [L.zero(s)])


def node() -> GoodSemigroup:
    return make_semigroup((1, 1), [(0, 0), (1, 1)])


# -- enumeration -------------------------------------------------------------

def _meet_closed_subsets(points, fixed, limit):
    """Subsets of ``points`` containing ``fixed`` and closed under meet.

    Backtracks over ``points`` in order, pruning as soon as the meet of a
    chosen pair is an already-rejected point.
    """
    fixed = list(fixed)
    free = [p for p in points if p not in set(fixed)]
    count = [0]
    out = []

    def rec(k, chosen, rejected):
        if k == len(free):
            count[0] += 1
            if count[0] > limit:
                raise BudgetExceeded(f"more than {limit} candidate subsets")
            cs = set(chosen)
            if all(L.meet(p, q) in cs for p, q in itertools.combinations(chosen, 2)):
                out.append(frozenset(chosen))
            return
        p = free[k]
        # include p
        ok = all(L.meet(p, q) not in rejected for q in chosen)
        if ok:
            rec(k + 1, chosen + [p], rejected)
        rec(k + 1, chosen, rejected | {p})

    rec(0, fixed, frozenset())
    return out


def enumerate_good(s: int, gamma_max):
    """Every good semigroup of N^s with conductor <= ``gamma_max``.

    Yields each semigroup once, ordered by conductor (lexicographic) and then
    by the sorted tuple of small elements.
    """
    gamma_max = L.point(gamma_max, s)
    if s > 2:
        raise ValueError("exhaustive enumeration is limited to s <= 2")
    limit = budget()
    spent = 0
    for gamma in L.box_points(L.zero(s), gamma_max):
        box = list(L.box_points(L.zero(s), gamma))
        spent += 2 ** max(len(box) - 2, 0)
        if spent > limit:
            raise BudgetExceeded(f"semigroup enumeration exceeds budget {limit}")
        found = []
        for small in _meet_closed_subsets(box, {L.zero(s), gamma}, limit):
            report = validate_good(s, L.zero(s), gamma, small, as_semigroup=True)
            if report.passed:
                found.append(GoodSemigroup(gamma, small, VERIFIED))
        found.sort(key=lambda S: S.sorted_small())
        yield from found


def base_ideals(S: GoodSemigroup) -> list:
    """Every good ideal of S with minimum 0, in deterministic order.

    Such an ideal contains ``gamma^S + N^s``, so its small elements lie in
    ``[0, gamma^S]`` and a subset of that box determines it.
    """
    s = S.s
    z = L.zero(s)
    box = list(L.box_points(z, S.gamma))
    limit = budget()
    if 2 ** max(len(box) - 2, 0) > limit:
        raise BudgetExceeded(f"ideal enumeration over {len(box)} cells exceeds budget {limit}")
    out = []
    for small in _meet_closed_subsets(box, {z, S.gamma}, limit):
        report = validate_good(s, z, S.gamma, small, S)
        if not (report.tags() - {"representation"}) and all(
            "not minimal" in v.message for v in report.violations
        ):
            out.append(Ideal(S, z, S.gamma, small, VERIFIED))
    out.sort(key=lambda E: (E.gamma, E.sorted_small()))
    return out


def enumerate_ideals(S: GoodSemigroup, mu_box: L.Box, gamma_box: L.Box | None = None):
    """Every good ideal E of S with mu^E in ``mu_box`` and gamma^E in ``gamma_box``.

    Ideals with a given minimum are translates of those with minimum 0.
    """
    bases = base_ideals(S)
    if mu_box.volume * len(bases) > budget():
        raise BudgetExceeded("ideal enumeration exceeds budget")
    for mu in mu_box:
        for B in bases:
            E = translate(B, mu)
            if gamma_box is None or E.gamma in gamma_box:
                yield E


# -- census ------------------------------------------------------------------

@dataclass
class HuntReport:
    params: dict
    tested: int = 0
    failures: list = field(default_factory=list)
    elapsed: float = 0.0


def _hunt_one(args):
    from .duality import dual, symmetry_report

    S, mu_box, gamma_box = args
    tested = 0
    failures = []
    for E in enumerate_ideals(S, mu_box, gamma_box):
        tested += 1
        rep = symmetry_report(S, E, dual(S, E))
        if not rep.all_true:
            failures.append((S, E, rep))
    return tested, failures


def hunt_cor26(s: int, gamma_max, mu_box: L.Box | None = None, gamma_box: L.Box | None = None,
               jobs: int = 1) -> HuntReport:
    """Run the symmetry conditions over every enumerated (S, E) pair.

    Failures are collected, never assumed away; the run does not stop at the
    first one.
    """
    gamma_max = L.point(gamma_max, s)
    if mu_box is None:
        mu_box = L.Box(L.zero(s), L.zero(s))
    params = {
        "s": s,
        "gamma_max": list(gamma_max),
        "mu_box": [list(mu_box.lo), list(mu_box.hi)],
        "gamma_box": None if gamma_box is None else [list(gamma_box.lo), list(gamma_box.hi)],
    }
    start = time.perf_counter()
    report = HuntReport(params)
    tasks = [(S, mu_box, gamma_box) for S in enumerate_good(s, gamma_max)]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_hunt_one, tasks))
    else:
        results = map(_hunt_one, tasks)
    for tested, failures in results:
        report.tested += tested
        for f in failures:
            log.info("condition failure: %s in %s", f[1], f[0])
        report.failures.extend(failures)
    report.elapsed = time.perf_counter() - start
    return report


__all__ = [
    "BudgetExceeded",
    "HuntReport",
    "ValidationError",
    "base_ideals",
    "enumerate_good",
    "enumerate_ideals",
    "from_small",
    "hunt_cor26",
    "natural",
    "node",
    "numerical",
    "product",
]
