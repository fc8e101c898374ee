"""Staircase pictures of planar (s = 2) ideals."""

from __future__ import annotations

from xml.sax.saxutils import escape

from . import lattice as L
from .semigroup import Ideal

CELL = 24


def _check(E: Ideal, window: L.Box):
    if E.s != 2 or window.s != 2:
        raise ValueError("staircase rendering needs s = 2")


def render_ascii(E: Ideal, window: L.Box) -> str:
    """One text row per second coordinate, highest first.

    ``#`` member, ``.`` non-member, ``M`` the minimum, ``G`` the conductor.
    """
    _check(E, window)
    (x0, y0), (x1, y1) = window.lo, window.hi
    rows = []
    for y in range(y1, y0 - 1, -1):
        row = []
        for x in range(x0, x1 + 1):
            p = (x, y)
            if p == E.mu:
                row.append("M")
            elif p == E.gamma:
                row.append("G")
            else:
                row.append("#" if p in E else ".")
        rows.append("".join(row))
    return "\n".join(rows) + "\n"


def render_svg(E: Ideal, window: L.Box, title: str | None = None) -> str:
    """A self-contained SVG grid.

    Small elements are dark, other members light, non-members white; the
    minimum and the conductor get a labelled ring.
    """
    _check(E, window)
    (x0, y0), (x1, y1) = window.lo, window.hi
    w = (x1 - x0 + 1) * CELL
    h = (y1 - y0 + 1) * CELL
    pad = CELL
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w + 2 * pad}" height="{h + 2 * pad}" '
        f'viewBox="0 0 {w + 2 * pad} {h + 2 * pad}">',
    ]
    if title:
        out.append(f"<title>{escape(title)}</title>")

    def corner(x, y):
        return pad + (x - x0) * CELL, pad + (y1 - y) * CELL

    for y in range(y0, y1 + 1):
        for x in range(x0, x1 + 1):
            p = (x, y)
            if p in E.small:
                fill = "#2b5d8a"
            elif p in E:
                fill = "#a9c6e3"
            else:
                fill = "#ffffff"
            cx, cy = corner(x, y)
            out.append(f'<rect x="{cx}" y="{cy}" width="{CELL}" height="{CELL}" '
                       f'fill="{fill}" stroke="#666666" stroke-width="0.5"/>')
    for p, label, colour in ((E.mu, "μ", "#c0392b"), (E.gamma, "γ", "#27ae60")):
        if p in window:
            cx, cy = corner(*p)
            out.append(f'<circle cx="{cx + CELL / 2}" cy="{cy + CELL / 2}" r="{CELL / 3}" '
                       f'fill="none" stroke="{colour}" stroke-width="2"/>')
            out.append(f'<text x="{cx + CELL / 2}" y="{cy - 2}" font-size="10" '
                       f'text-anchor="middle" fill="{colour}">{label}</text>')
    for x in range(x0, x1 + 1):
        cx, _ = corner(x, y0)
        out.append(f'<text x="{cx + CELL / 2}" y="{h + pad + 14}" font-size="9" text-anchor="middle">{x}</text>')
    for y in range(y0, y1 + 1):
        _, cy = corner(x0, y)
        out.append(f'<text x="{pad - 4}" y="{cy + CELL / 2 + 3}" font-size="9" text-anchor="end">{y}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_staircase(E: Ideal, window: L.Box, fmt: str = "ascii") -> str:
    if fmt == "ascii":
        return render_ascii(E, window)
    if fmt == "svg":
        return render_svg(E, window)
    raise ValueError(f"unknown format {fmt!r}")
