"""Points of Z^s, the componentwise order, boxes and unit-step chains.

Points are plain tuples of ints.  Axes are 0-based throughout the package.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

Point = tuple[int, ...]

MAX_DIM = 4
COORD_BOUND = 2**31 - 1

LESS = "less-or-equal"
GREATER = "greater-or-equal"
EQUAL = "equal"
INCOMPARABLE = "incomparable"


class DimensionError(ValueError):
    pass


def point(coords: Sequence[int], s: int | None = None) -> Point:
    p = tuple(int(c) for c in coords)
    if not 1 <= len(p) <= MAX_DIM:
        raise DimensionError(f"dimension {len(p)} outside [1, {MAX_DIM}]")
    if s is not None and len(p) != s:
        raise DimensionError(f"expected a point of dimension {s}, got {p}")
    for c in p:
        if abs(c) > COORD_BOUND:
            raise OverflowError(f"coordinate {c} exceeds the supported range")
    return p


def _check(a: Point, b: Point) -> None:
    if len(a) != len(b):
        raise DimensionError(f"dimension mismatch: {a} vs {b}")


def zero(s: int) -> Point:
    return (0,) * s


def ones(s: int) -> Point:
    return (1,) * s


def unit(s: int, i: int) -> Point:
    return tuple(1 if k == i else 0 for k in range(s))


def unit_sum(s: int, axes) -> Point:
    """The vector e_J for a collection of axes J."""
    axes = set(axes)
    return tuple(1 if k in axes else 0 for k in range(s))


def add(a: Point, b: Point) -> Point:
    _check(a, b)
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Point, b: Point) -> Point:
    _check(a, b)
    return tuple(x - y for x, y in zip(a, b))


def neg(a: Point) -> Point:
    return tuple(-x for x in a)


def meet(a: Point, b: Point) -> Point:
    _check(a, b)
    return tuple(x if x < y else y for x, y in zip(a, b))


def join(a: Point, b: Point) -> Point:
    _check(a, b)
    return tuple(x if x > y else y for x, y in zip(a, b))


def meet_all(points) -> Point:
    it = iter(points)
    acc = next(it)
    for p in it:
        acc = meet(acc, p)
    return acc


def leq(a: Point, b: Point) -> bool:
    _check(a, b)
    return all(x <= y for x, y in zip(a, b))


def lt(a: Point, b: Point) -> bool:
    return a != b and leq(a, b)


def compare(a: Point, b: Point) -> str:
    _check(a, b)
    if a == b:
        return EQUAL
    if all(x <= y for x, y in zip(a, b)):
        return LESS
    if all(x >= y for x, y in zip(a, b)):
        return GREATER
    return INCOMPARABLE


def norm1(a: Point, b: Point) -> int:
    """Number of unit steps from a up to b (requires a <= b)."""
    if not leq(a, b):
        raise ValueError(f"{a} is not <= {b}")
    return sum(y - x for x, y in zip(a, b))


@dataclass(frozen=True)
class Box:
    lo: Point
    hi: Point

    def __post_init__(self):
        _check(self.lo, self.hi)
        if not leq(self.lo, self.hi):
            raise ValueError(f"malformed box: {self.lo} is not <= {self.hi}")

    @property
    def s(self) -> int:
        return len(self.lo)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(h - l + 1 for l, h in zip(self.lo, self.hi))

    @property
    def volume(self) -> int:
        v = 1
        for n in self.shape:
            v *= n
        return v

    def __contains__(self, p) -> bool:
        return leq(self.lo, p) and leq(p, self.hi)

    def __iter__(self) -> Iterator[Point]:
        return box_points(self.lo, self.hi)

    def expand(self, k: int) -> "Box":
        return Box(tuple(x - k for x in self.lo), tuple(x + k for x in self.hi))


def box_points(lo: Point, hi: Point) -> Iterator[Point]:
    """All points of [lo, hi] in lexicographic order (empty if lo is not <= hi)."""
    _check(lo, hi)
    ranges = [range(l, h + 1) for l, h in zip(lo, hi)]
    return itertools.product(*ranges)


def unit_chain(a: Point, b: Point, policy: str = "axis") -> list[tuple[Point, int]]:
    """Unit-step chain from a to b as a list of (point, axis) steps.

    Each step moves from ``point`` to ``point + e_axis``.  With
    ``policy="axis"`` axis 0 is raised fully, then axis 1, and so on;
    ``policy="round-robin"`` cycles through the axes that still have room.
    """
    if not leq(a, b):
        raise ValueError(f"{a} is not <= {b}")
    remaining = [y - x for x, y in zip(a, b)]
    cur = list(a)
    steps = []
    if policy == "axis":
        order = [i for i, r in enumerate(remaining) for _ in range(r)]
    elif policy == "round-robin":
        order = []
        left = remaining[:]
        while any(left):
            for i in range(len(left)):
                if left[i]:
                    order.append(i)
                    left[i] -= 1
    else:
        raise ValueError(f"unknown chain policy {policy!r}")
    for i in order:
        steps.append((tuple(cur), i))
        cur[i] += 1
    return steps


CHAIN_POLICIES = ("axis", "round-robin")
