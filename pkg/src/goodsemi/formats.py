"""The ``goodsemi/1`` JSON interchange format.

A document is a JSON object with ``"format": "goodsemi/1"`` and a ``kind``::

    {"format": "goodsemi/1", "kind": "semigroup", "s": 2,
     "gamma": [1, 1], "small": [[0, 0], [1, 1]]}

Ideals add ``"mu"`` and ``"parent"`` (an inline semigroup object, or a path
relative to the ideal's file).  Polynomials carry ``"terms"`` as a list of
``{"exp": [...], "coeff": c}`` in graded-lexicographic order.  Reports are
free-form payloads under ``"report"``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .lattice import MAX_DIM
from .poincare import PoincarePolynomial
from .semigroup import (
    GoodSemigroup,
    Ideal,
    ValidationError,
    ValidationReport,
    make_ideal,
    make_semigroup,
)

FORMAT = "goodsemi/1"
KINDS = ("semigroup", "ideal", "polynomial", "report")

_FIELDS = {
    "semigroup": {"format", "kind", "s", "gamma", "small"},
    "ideal": {"format", "kind", "s", "mu", "gamma", "small", "parent"},
    "polynomial": {"format", "kind", "s", "terms"},
    "report": {"format", "kind", "report"},
}
_REQUIRED = {
    "semigroup": {"kind", "s", "gamma", "small"},
    "ideal": {"kind", "s", "mu", "gamma", "small"},
    "polynomial": {"kind", "s", "terms"},
    "report": {"kind", "report"},
}


class DocumentError(ValueError):
    pass


class DocumentSyntaxError(DocumentError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = f" at line {line}, column {column}" if line is not None else ""
        super().__init__(f"{message}{where}")


class SemanticError(DocumentError):
    def __init__(self, message, report: ValidationReport | None = None):
        self.report = report
        super().__init__(message if report is None else f"{message}: {report}")


@dataclass
class Document:
    kind: str
    payload: object
    version: str = FORMAT


# -- to JSON ------------------------------------------------------------------

def _pts(points):
    return [list(p) for p in sorted(points)]


def semigroup_obj(S: GoodSemigroup, with_format: bool = True) -> dict:
    obj = {"format": FORMAT} if with_format else {}
    obj.update(kind="semigroup", s=S.s, gamma=list(S.gamma), small=_pts(S.small))
    return obj


def ideal_obj(E: Ideal, parent_ref=None) -> dict:
    obj = {"format": FORMAT, "kind": "ideal", "s": E.s, "mu": list(E.mu),
           "gamma": list(E.gamma), "small": _pts(E.small)}
    obj["parent"] = parent_ref if parent_ref is not None else semigroup_obj(E.parent, False)
    return obj


def polynomial_obj(P: PoincarePolynomial) -> dict:
    terms = [{"exp": list(e), "coeff": c} for e, c in P.sorted_terms()]
    return {"format": FORMAT, "kind": "polynomial", "s": P.s, "terms": terms}


def symmetry_payload(report, identity=None) -> dict:
    conds = dict(zip(("i", "ii", "iii", "iv"), report.conditions))
    return {
        "report": "symmetry",
        "conditions": conds,
        "theorem_identity": identity,
        "violations": [{"condition": c, "point": list(p), "axis": i} for c, p, i in report.violations],
    }


def hunt_payload(hunt) -> dict:
    """Serializable census; the wall-clock time is left out so reruns are
    byte-identical."""
    failures = []
    for S, E, rep in hunt.failures:
        failures.append({
            "semigroup": semigroup_obj(S, False),
            "ideal": {k: v for k, v in ideal_obj(E).items() if k not in ("format", "parent")},
            "symmetry": symmetry_payload(rep),
        })
    return {"report": "hunt", "params": hunt.params, "tested": hunt.tested, "failures": failures}


def to_obj(doc: Document) -> dict:
    if doc.kind == "semigroup":
        return semigroup_obj(doc.payload)
    if doc.kind == "ideal":
        return ideal_obj(doc.payload)
    if doc.kind == "polynomial":
        return polynomial_obj(doc.payload)
    if doc.kind == "report":
        return {"format": FORMAT, "kind": "report", "report": doc.payload}
    raise DocumentError(f"unknown kind {doc.kind!r}")


def _is_leaf(v) -> bool:
    if isinstance(v, dict):
        return False
    if isinstance(v, list):
        return all(_is_leaf(x) for x in v)
    return True


def _render(v, indent: int) -> str:
    pad = "  " * indent
    if _is_leaf(v):
        return json.dumps(v, separators=(", ", ": "), ensure_ascii=False)
    if isinstance(v, dict):
        if not v:
            return "{}"
        inner = [f'{pad}  {json.dumps(k)}: {_render(x, indent + 1)}' for k, x in v.items()]
        return "{\n" + ",\n".join(inner) + "\n" + pad + "}"
    inner = [pad + "  " + _render(x, indent + 1) for x in v]
    return "[\n" + ",\n".join(inner) + "\n" + pad + "]"


def dumps(obj: dict) -> str:
    """Deterministic, diff-friendly JSON: nested objects on separate lines,
    point lists inline."""
    return _render(obj, 0) + "\n"


def print_document(doc: Document) -> str:
    return dumps(to_obj(doc))


# -- from JSON ----------------------------------------------------------------

def _points(value, s, name):
    if not isinstance(value, list) or not all(isinstance(p, list) for p in value):
        raise SemanticError(f"{name} must be a list of integer arrays")
    return [_point(p, s, name) for p in value]


def _point(value, s, name):
    if not isinstance(value, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in value):
        raise SemanticError(f"{name} must be an integer array")
    if len(value) != s:
        raise SemanticError(f"{name} has dimension {len(value)}, expected {s}")
    return tuple(value)


def _check_fields(obj, kind):
    unknown = set(obj) - _FIELDS[kind]
    if unknown:
        raise SemanticError(f"unknown fields for {kind}: {sorted(unknown)}")
    missing = _REQUIRED[kind] - set(obj)
    if missing:
        raise SemanticError(f"missing fields for {kind}: {sorted(missing)}")
    if "format" in obj and obj["format"] != FORMAT:
        raise SemanticError(f"unsupported format {obj['format']!r}")
    s = obj.get("s")
    if kind != "report" and (not isinstance(s, int) or isinstance(s, bool) or s < 1):
        raise SemanticError("s must be a positive integer")
    if kind != "report" and s > MAX_DIM:
        raise SemanticError(f"s = {s} exceeds the supported maximum {MAX_DIM}")


def _semigroup_from(obj) -> GoodSemigroup:
    if not isinstance(obj, dict) or obj.get("kind", "semigroup") != "semigroup":
        raise SemanticError("parent must be a semigroup object")
    obj = dict(obj)
    obj.setdefault("kind", "semigroup")
    _check_fields(obj, "semigroup")
    s = obj["s"]
    try:
        return make_semigroup(_point(obj["gamma"], s, "gamma"), _points(obj["small"], s, "small"))
    except ValidationError as exc:
        raise SemanticError("not a good semigroup", exc.report) from None


def from_obj(obj, base_dir: Path | None = None, parent: GoodSemigroup | None = None) -> Document:
    if not isinstance(obj, dict):
        raise SemanticError("a document must be a JSON object")
    kind = obj.get("kind")
    if kind not in KINDS:
        raise SemanticError(f"unknown kind {kind!r}")
    if "format" not in obj:
        raise SemanticError("missing field 'format'")
    _check_fields(obj, kind)
    if kind == "semigroup":
        return Document(kind, _semigroup_from(obj))
    if kind == "ideal":
        s = obj["s"]
        ref = obj.get("parent")
        if ref is None:
            if parent is None:
                raise SemanticError("ideal has no parent semigroup")
            P = parent
        elif isinstance(ref, str):
            path = Path(ref) if base_dir is None else Path(base_dir) / ref
            P = load(path).payload
            if not isinstance(P, GoodSemigroup):
                raise SemanticError(f"parent file {ref} is not a semigroup")
        else:
            P = _semigroup_from(ref)
        if parent is not None and P != parent:
            raise SemanticError("ideal's parent differs from the given semigroup")
        if P.s != s:
            raise SemanticError("ideal and parent have different dimensions")
        try:
            E = make_ideal(P, _point(obj["mu"], s, "mu"), _point(obj["gamma"], s, "gamma"),
                           _points(obj["small"], s, "small"))
        except ValidationError as exc:
            raise SemanticError("not a good semigroup ideal", exc.report) from None
        return Document(kind, E)
    if kind == "polynomial":
        items = []
        for t in obj["terms"]:
            if not isinstance(t, dict) or set(t) != {"exp", "coeff"}:
                raise SemanticError("each term needs exactly 'exp' and 'coeff'")
            c = t["coeff"]
            if not isinstance(c, int) or isinstance(c, bool):
                raise SemanticError("coefficients must be integers")
            items.append((_point(t["exp"], obj["s"], "exp"), c))
        return Document(kind, PoincarePolynomial.from_list(obj["s"], items))
    return Document(kind, obj["report"])


def parse(text: str, base_dir: Path | None = None, parent: GoodSemigroup | None = None) -> Document:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentSyntaxError(exc.msg, exc.lineno, exc.colno) from None
    return from_obj(obj, base_dir, parent)


def load(path, parent: GoodSemigroup | None = None) -> Document:
    path = Path(path)
    return parse(path.read_text(encoding="utf-8"), path.parent, parent)


def canonical(text: str, base_dir: Path | None = None) -> str:
    return print_document(parse(text, base_dir))
