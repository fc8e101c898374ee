"""Good semigroups and their ideals in the small-elements representation.

An ideal ``E`` is stored as ``(mu, gamma, small)`` where ``mu`` is its
minimum, ``gamma`` its conductor and ``small = E ∩ [mu, gamma]``.  Membership
of an arbitrary point follows from::

    a in E  <=>  a >= mu  and  meet(a, gamma) in small

A good semigroup is the special case with ``mu = 0`` that is its own parent.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import lattice as L
from .lattice import Point

VERIFIED = "verified-good"
E1_ONLY = "E1-only"
INVALID = "invalid"
UNCHECKED = "unchecked"

TAGS = ("E0", "E1", "E2", "ideal-closure", "representation")


@dataclass(frozen=True)
class Violation:
    tag: str
    witnesses: tuple
    message: str


@dataclass
class ValidationReport:
    violations: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def add(self, tag, witnesses, message):
        self.violations.append(Violation(tag, tuple(witnesses), message))

    def tags(self) -> set:
        return {v.tag for v in self.violations}

    def __str__(self):
        if self.passed:
            return "passed"
        lines = [f"{v.tag}: {v.message}" for v in self.violations]
        return "failed\n  " + "\n  ".join(lines)


class ValidationError(ValueError):
    """Raised when a representation does not describe a good semigroup (ideal)."""

    def __init__(self, report: ValidationReport, what: str = "object"):
        self.report = report
        super().__init__(f"invalid {what}: {report}")


class InternalError(AssertionError):
    """A cross-check between two independent computations disagreed."""


def shrink_gamma(mu: Point, gamma: Point, small) -> tuple[Point, frozenset]:
    """Lower ``gamma`` axis by axis while the represented set stays the same.

    Lowering axis ``i`` by one keeps the set iff every box point ``b`` with
    ``b_i = gamma_i`` has the same membership as ``b - e_i``.
    """
    small = set(small)
    gamma = list(gamma)
    s = len(gamma)
    changed = True
    while changed:
        changed = False
        for i in range(s):
            if gamma[i] <= mu[i]:
                continue
            top = [p for p in small if p[i] == gamma[i]]
            below = {p[:i] + (p[i] - 1,) + p[i + 1:] for p in top}
            # the layer just below the top face must mirror the face
            layer = {p for p in small if p[i] == gamma[i] - 1}
            if layer != below:
                continue
            small.difference_update(top)
            gamma[i] -= 1
            changed = True
    return tuple(gamma), frozenset(small)


class Ideal:
    """A semigroup ideal of a good semigroup, in small-elements form.

    Construct through :func:`make_ideal` (validating) or the operations of
    :mod:`goodsemi.idealops`; the raw constructor only canonicalizes the
    conductor.
    """

    __slots__ = ("parent", "mu", "gamma", "small", "goodness", "s", "_hash", "_delta", "_by_axis")

    def __init__(self, parent, mu, gamma, small, goodness=UNCHECKED):
        mu = L.point(mu)
        s = len(mu)
        gamma = L.point(gamma, s)
        small = frozenset(L.point(p, s) for p in small)
        gamma, small = shrink_gamma(mu, gamma, small)
        self.s = s
        self.parent = self if parent is None else parent
        self.mu = mu
        self.gamma = gamma
        self.small = small
        self.goodness = goodness
        self._hash = None
        self._delta = {}
        self._by_axis = None

    # -- representation -------------------------------------------------
    def key(self):
        return (self.mu, self.gamma, self.small)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.key())
        return self._hash

    def __repr__(self):
        return f"{type(self).__name__}(mu={self.mu}, gamma={self.gamma}, small={sorted(self.small)})"

    def __getstate__(self):
        parent = None if self.parent is self else self.parent
        return (parent, self.mu, self.gamma, self.small, self.goodness)

    def __setstate__(self, state):
        parent, mu, gamma, small, goodness = state
        self.s = len(mu)
        self.parent = self if parent is None else parent
        self.mu, self.gamma, self.small, self.goodness = mu, gamma, small, goodness
        self._hash = None
        self._delta = {}
        self._by_axis = None

    def sorted_small(self) -> list:
        return sorted(self.small)

    @property
    def box(self) -> L.Box:
        return L.Box(self.mu, self.gamma)

    # -- membership -----------------------------------------------------
    def __contains__(self, a) -> bool:
        mu = self.mu
        gamma = self.gamma
        if len(a) != self.s:
            raise L.DimensionError(f"point {a} has dimension {len(a)}, expected {self.s}")
        for x, m in zip(a, mu):
            if x < m:
                return False
        return tuple(x if x < g else g for x, g in zip(a, gamma)) in self.small

    def members(self, lo: Point, hi: Point) -> list:
        """Members of the ideal in the box [lo, hi], lexicographically sorted."""
        return [p for p in L.box_points(lo, hi) if p in self]

    def _axis_index(self):
        if self._by_axis is None:
            idx = [dict() for _ in range(self.s)]
            for q in self.small:
                for i in range(self.s):
                    idx[i].setdefault(q[i], []).append(q)
            self._by_axis = idx
        return self._by_axis


class GoodSemigroup(Ideal):
    """A good semigroup S ⊆ N^s given by its conductor and small elements."""

    __slots__ = ()

    def __init__(self, gamma, small, goodness=UNCHECKED):
        gamma = L.point(gamma)
        super().__init__(None, L.zero(len(gamma)), gamma, small, goodness)

    def __reduce__(self):
        return (_rebuild_semigroup, (self.gamma, self.small, self.goodness))

    @property
    def tau(self) -> Point:
        return L.sub(self.gamma, L.ones(self.s))


def _rebuild_semigroup(gamma, small, goodness):
    return GoodSemigroup(gamma, small, goodness)


def contains(E: Ideal, a) -> bool:
    return tuple(a) in E


# -- validation ------------------------------------------------------------

def _e2_witness(small, gamma, a, b, j):
    """Search E for the exchange witness of (E2) for the pair a, b at axis j.

    Returns a witness point or None.  Every member ``e`` is reached through
    ``q = meet(e, gamma)`` in ``small``; coordinates where ``q`` sits on the
    conductor are free above it.
    """
    s = len(a)
    for q in small:
        eps = []
        for k in range(s):
            free = q[k] == gamma[k]
            if k == j:
                if free:
                    eps.append(max(gamma[k], a[k] + 1))
                elif q[k] > a[k]:
                    eps.append(q[k])
                else:
                    break
            elif a[k] != b[k]:
                m = min(a[k], b[k])
                if q[k] == m or (free and m >= gamma[k]):
                    eps.append(m)
                else:
                    break
            else:
                if free:
                    eps.append(max(gamma[k], a[k]))
                elif q[k] >= a[k]:
                    eps.append(q[k])
                else:
                    break
        else:
            return tuple(eps)
    return None


def validate_good(s, mu, gammaE, small, parent=None, *, as_semigroup=False) -> ValidationReport:
    """Check representation, (E1), (E2) and, given a parent, E + S ⊆ E.

    (E0) holds by construction since the conductor is encoded.  With
    ``as_semigroup=True`` the set is checked as a submonoid of N^s.
    """
    report = ValidationReport()
    try:
        mu = L.point(mu, s)
        gammaE = L.point(gammaE, s)
        small = frozenset(L.point(p, s) for p in small)
    except (L.DimensionError, OverflowError, TypeError) as exc:
        report.add("representation", (), str(exc))
        return report
    if not small:
        report.add("representation", (), "empty set of small elements")
        return report
    if not L.leq(mu, gammaE):
        report.add("representation", (mu, gammaE), "malformed box: mu is not <= gamma")
        return report
    if mu not in small:
        report.add("representation", (mu,), "mu is not a small element")
    if gammaE not in small:
        report.add("representation", (gammaE,), "gamma is not a small element")
    outside = sorted(p for p in small if not (L.leq(mu, p) and L.leq(p, gammaE)))
    for p in outside:
        report.add("representation", (p,), f"small element {p} outside [mu, gamma]")
    if report.violations:
        return report
    g2, _ = shrink_gamma(mu, gammaE, small)
    if g2 != gammaE:
        report.add("representation", (gammaE, g2), f"conductor {gammaE} is not minimal ({g2} suffices)")
    if as_semigroup and mu != L.zero(s):
        report.add("representation", (mu,), "a semigroup must have minimum 0")

    pts = sorted(small)
    # (E1): the small elements must be closed under meet
    for x in range(len(pts)):
        for y in range(x + 1, len(pts)):
            m = L.meet(pts[x], pts[y])
            if m not in small:
                report.add("E1", (pts[x], pts[y]), f"meet {m} of {pts[x]} and {pts[y]} is missing")
    # (E2) on pairs of small elements; witnesses only need the box [mu, gamma + 1]
    for x in range(len(pts)):
        for y in range(x + 1, len(pts)):
            a, b = pts[x], pts[y]
            for j in range(s):
                if a[j] != b[j]:
                    continue
                if _e2_witness(small, gammaE, a, b, j) is None:
                    report.add("E2", (a, b), f"no exchange witness for {a}, {b} at axis {j}")

    if as_semigroup or parent is not None:
        tmp = Ideal.__new__(Ideal)
        tmp.s, tmp.mu, tmp.gamma, tmp.small = s, mu, gammaE, small
        if as_semigroup:
            gens = pts
        else:
            # sums p + q with q beyond this box land past the conductor of E
            c = L.join(parent.gamma, L.sub(gammaE, mu))
            gens = parent.members(L.zero(s), c)
        for p in pts:
            for q in gens:
                t = L.add(p, q)
                if t not in tmp:
                    tag = "ideal-closure"
                    report.add(tag, (p, q), f"{p} + {q} = {t} is not a member")
    return report


def make_ideal(parent: GoodSemigroup, mu, gamma, small) -> Ideal:
    """Canonicalize and validate an ideal of ``parent``; raise on failure."""
    mu = L.point(mu)
    gamma = L.point(gamma, len(mu))
    small = [L.point(p, len(mu)) for p in small]
    report = validate_good(len(mu), mu, gamma, small, parent)
    if report.tags() - {"representation"} or _structural(report):
        raise ValidationError(report, "ideal")
    E = Ideal(parent, mu, gamma, small, VERIFIED)
    return E


def make_semigroup(gamma, small) -> GoodSemigroup:
    gamma = L.point(gamma)
    small = [L.point(p, len(gamma)) for p in small]
    report = validate_good(len(gamma), L.zero(len(gamma)), gamma, small, as_semigroup=True)
    if report.tags() - {"representation"} or _structural(report):
        raise ValidationError(report, "semigroup")
    return GoodSemigroup(gamma, small, VERIFIED)


def _structural(report) -> bool:
    """True for representation violations other than a non-minimal conductor."""
    return any(v.tag == "representation" and "not minimal" not in v.message for v in report.violations)


def validate(E: Ideal) -> ValidationReport:
    if isinstance(E, GoodSemigroup):
        return validate_good(E.s, E.mu, E.gamma, E.small, as_semigroup=True)
    return validate_good(E.s, E.mu, E.gamma, E.small, E.parent)


def classify(E: Ideal) -> str:
    """Goodness label for an ideal produced by a computation."""
    report = validate(E)
    if report.passed:
        return VERIFIED
    if "E1" in report.tags() or _structural(report):
        return INVALID
    return E1_ONLY


# -- Δ-sets ------------------------------------------------------------------

def _closed_delta(E: Ideal, d: Point, i: int):
    key = (d, i)
    hit = E._delta.get(key)
    if hit is not None:
        return hit
    g = E.gamma
    if d[i] > g[i]:
        res = (True, L.join(d, g))
    else:
        res = (False, None)
        bound = [min(x, y) for x, y in zip(d, g)]
        for q in E._axis_index()[i].get(d[i], ()):
            if all(q[j] >= bound[j] for j in range(E.s) if j != i):
                res = (True, L.join(q, d))
                break
    E._delta[key] = res
    return res


def delta_nonempty(E: Ideal, a, i: int, closed: bool = True):
    """Test whether the Δ-set of E at ``a`` along axis ``i`` is nonempty.

    ``closed=True`` uses ``β_i = a_i, β_j >= a_j``; ``closed=False`` the
    strict variant ``β_j > a_j``.  Returns ``(nonempty, witness)``.
    """
    a = L.point(a, E.s)
    if not 0 <= i < E.s:
        raise IndexError(f"axis {i} out of range for s={E.s}")
    if closed:
        return _closed_delta(E, a, i)
    shifted = tuple(x + 1 if k != i else x for k, x in enumerate(a))
    return _closed_delta(E, shifted, i)


def delta_union_empty(E: Ideal, a, closed: bool = False) -> bool:
    return not any(delta_nonempty(E, a, i, closed)[0] for i in range(E.s))
