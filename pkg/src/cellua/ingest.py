"""Reading and writing algebra files, quiver algebras, and the built-in examples.

Two file formats are supported, both JSON with ``"schema": 1``; the
field-by-field description lives in ``docs/file-formats.md``.

* ``.cell.json`` describes an algebra with a cell datum and, optionally,
  an idempotent decomposition with its alpha map.
* ``.quiver.json`` describes a quiver with relations; the algebra is
  built by reducing paths modulo the relations.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Mapping, Sequence

import jsonschema

from .algebra import Algebra, CellDatum
from .alpha import AlphaDatum
from .field import Field, QQ, parse_field
from .linalg import Coordinates, rref_rows
from .poset import Poset, PosetError


class InputError(ValueError):
    """Malformed input: bad file, bad schema, bad builtin name."""


class SchemaError(InputError):
    pass


class NotFiniteWithinCapError(InputError):
    """Paths up to the length cap do not close up under multiplication."""


# -- label encoding ------------------------------------------------------
# Labels are strings, or tuples of labels (written as JSON arrays).

def _enc(label):
    if isinstance(label, tuple):
        return [_enc(x) for x in label]
    return label


def _dec(obj):
    if isinstance(obj, list):
        return tuple(_dec(x) for x in obj)
    return obj


def _text(field: Field, c) -> str:
    return field.to_text(c)


# -- schema --------------------------------------------------------------

_LABEL = {"anyOf": [{"type": "string"}, {"type": "array"}]}
_SCALAR = {"type": "string", "pattern": r"^\s*-?\d+(\s*/\s*\d+)?\s*$"}
_COMBO = {"type": "object", "additionalProperties": _SCALAR}
_POSET = {
    "type": "object",
    "required": ["labels", "covers"],
    "properties": {
        "labels": {"type": "array", "items": _LABEL, "minItems": 1},
        "covers": {"type": "array", "items": {"type": "array", "items": _LABEL, "minItems": 2, "maxItems": 2}},
    },
    "additionalProperties": False,
}
_INDEX_SETS = {"type": "object", "additionalProperties": {"type": "array", "items": _LABEL, "minItems": 1}}
_ALPHA = {
    "type": "object",
    "required": ["lambda_tilde", "lambda", "idempotents", "x", "map"],
    "properties": {
        "lambda_tilde": _POSET,
        "lambda": {"type": "array", "items": _LABEL, "minItems": 1},
        "idempotents": {"type": "object", "additionalProperties": _COMBO},
        "x": _POSET,
        "map": {"type": "object", "additionalProperties": _LABEL},
    },
    "additionalProperties": False,
}

CELL_SCHEMA = {
    "type": "object",
    "required": ["schema", "field", "cells", "basis", "products", "unit"],
    "properties": {
        "schema": {"const": 1},
        "name": {"type": "string"},
        "field": {"type": "string", "pattern": r"^(rational|fp:\d+)$"},
        "cells": _POSET,
        "index_sets": _INDEX_SETS,
        "rows": _INDEX_SETS,
        "cols": _INDEX_SETS,
        "basis": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "cell", "row", "col"],
                "properties": {"name": {"type": "string"}, "cell": _LABEL, "row": _LABEL, "col": _LABEL},
                "additionalProperties": False,
            },
        },
        "products": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["left", "right", "result"],
                "properties": {"left": {"type": "string"}, "right": {"type": "string"}, "result": _COMBO},
                "additionalProperties": False,
            },
        },
        "unit": _COMBO,
        "involution": {"type": "boolean"},
        "alpha": _ALPHA,
    },
    "oneOf": [{"required": ["index_sets"]}, {"required": ["rows", "cols"]}],
    "additionalProperties": False,
}

QUIVER_SCHEMA = {
    "type": "object",
    "required": ["schema", "vertices", "arrows", "relations"],
    "properties": {
        "schema": {"const": 1},
        "name": {"type": "string"},
        "field": {"type": "string", "pattern": r"^(rational|fp:\d+)$"},
        "vertices": {"type": "array", "items": {"type": "string"}, "minItems": 1},
        "arrows": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "source", "target"],
                "properties": {"name": {"type": "string"}, "source": {"type": "string"},
                               "target": {"type": "string"}},
                "additionalProperties": False,
            },
        },
        "relations": {"type": "array", "items": _COMBO},
        "cap": {"type": "integer", "minimum": 1},
        "cells": _POSET,
        "index_sets": _INDEX_SETS,
        "cell_basis": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["cell", "row", "col", "path"],
                "properties": {"cell": _LABEL, "row": _LABEL, "col": _LABEL, "path": {"type": "string"}},
                "additionalProperties": False,
            },
        },
        "alpha": _ALPHA,
    },
    "additionalProperties": False,
}


def _validate(doc, schema):
    validator = jsonschema.Draft202012Validator(schema)
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.absolute_path))
    if errors:
        e = errors[0]
        path = "/".join(str(p) for p in e.absolute_path) or "<root>"
        raise SchemaError(f"schema violation at {path}: {e.message}")


def _load_json(data) -> dict:
    if isinstance(data, (bytes, bytearray)):
        data = data.decode("utf-8")
    try:
        return json.loads(data)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def _poset(obj, where: str) -> Poset:
    labels = [_dec(x) for x in obj["labels"]]
    covers = [(_dec(a), _dec(b)) for a, b in obj["covers"]]
    try:
        return Poset(labels, covers)
    except PosetError as exc:
        raise PosetError(f"{where}: {exc}") from None


def _combo(alg_names: Mapping[str, int], combo: Mapping[str, str], field: Field, where: str) -> dict:
    out = {}
    for nm, c in combo.items():
        if nm not in alg_names:
            raise SchemaError(f"{where}: unknown basis element {nm!r}")
        try:
            out[alg_names[nm]] = field(Fraction(c.replace(" ", "")))
        except ZeroDivisionError as exc:
            raise SchemaError(f"{where}: {exc}") from None
    return out


# -- .cell.json ------------------------------------------------------------

def parse(data) -> tuple[Algebra, AlphaDatum | None]:
    """Build an algebra (and alpha datum if present) from ``.cell.json`` text."""
    doc = _load_json(data)
    _validate(doc, CELL_SCHEMA)
    try:
        field = parse_field(doc["field"])
    except ValueError as exc:
        raise SchemaError(f"field: {exc}") from None
    poset = _poset(doc["cells"], "cells")
    if "index_sets" in doc:
        rows = cols = {_dec_key(k): [_dec(x) for x in v] for k, v in doc["index_sets"].items()}
    else:
        rows = {_dec_key(k): [_dec(x) for x in v] for k, v in doc["rows"].items()}
        cols = {_dec_key(k): [_dec(x) for x in v] for k, v in doc["cols"].items()}
    try:
        datum = CellDatum(poset, rows, cols)
    except ValueError as exc:
        raise SchemaError(f"index sets: {exc}") from None
    by_label = {}
    for n, b in enumerate(doc["basis"]):
        lab = (_dec(b["cell"]), _dec(b["row"]), _dec(b["col"]))
        if lab in by_label:
            raise SchemaError(f"basis/{n}: label {lab} used twice")
        by_label[lab] = b["name"]
    labels = datum.labels()
    if set(labels) != set(by_label):
        missing = [l for l in labels if l not in by_label]
        extra = [l for l in by_label if l not in set(labels)]
        raise SchemaError(f"basis: labels do not match the index sets (missing {missing[:3]}, extra {extra[:3]})")
    names = [by_label[lab] for lab in labels]
    if len(set(names)) != len(names):
        raise SchemaError("basis: names must be distinct")
    index = {nm: i for i, nm in enumerate(names)}
    table = {}
    for n, p in enumerate(doc["products"]):
        where = f"products/{n}"
        for side in ("left", "right"):
            if p[side] not in index:
                raise SchemaError(f"{where}/{side}: unknown basis element {p[side]!r}")
        key = (index[p["left"]], index[p["right"]])
        if key in table:
            raise SchemaError(f"{where}: product listed twice")
        table[key] = _combo(index, p["result"], field, where + "/result")
    unit = _combo(index, doc["unit"], field, "unit")
    involutive = doc.get("involution", datum.is_symmetric)
    alg = Algebra(field, names, table, unit, datum, doc.get("name", ""), involutive=involutive)
    ad = _parse_alpha(doc["alpha"], index, field) if "alpha" in doc else None
    return alg, ad


def _dec_key(k: str):
    # object keys are strings; a tuple label is written as its JSON text
    if k.startswith("["):
        return _dec(json.loads(k))
    return k


def _enc_key(label) -> str:
    if isinstance(label, tuple):
        return json.dumps(_enc(label), separators=(",", ":"))
    return label


def _parse_alpha(obj, index, field) -> AlphaDatum:
    lt = _poset(obj["lambda_tilde"], "alpha/lambda_tilde")
    xp = _poset(obj["x"], "alpha/x")
    lam = tuple(_dec(x) for x in obj["lambda"])
    n = len(index)
    idem = {}
    for k, combo in obj["idempotents"].items():
        v = [field.zero] * n
        for i, c in _combo(index, combo, field, f"alpha/idempotents/{k}").items():
            v[i] = c
        idem[_dec_key(k)] = tuple(v)
    amap = {_dec_key(k): _dec(v) for k, v in obj["map"].items()}
    return AlphaDatum(lt, lam, idem, xp, amap)


def _poset_doc(p: Poset) -> dict:
    return {"labels": [_enc(x) for x in p.elements], "covers": [[_enc(a), _enc(b)] for a, b in p.covers()]}


def _combo_doc(alg: Algebra, vec) -> dict:
    return {alg.names[k]: _text(alg.field, c) for k, c in enumerate(vec) if c}


def to_document(alg: Algebra, ad: AlphaDatum | None = None) -> dict:
    if alg.datum is None:
        raise ValueError("only algebras with a cell datum can be serialized")
    d = alg.datum
    doc = {"schema": 1}
    if alg.name:
        doc["name"] = alg.name
    doc["field"] = alg.field.name
    doc["cells"] = _poset_doc(d.poset)
    if d.is_symmetric:
        doc["index_sets"] = {_enc_key(l): [_enc(x) for x in d.rows[l]] for l in d.poset}
    else:
        doc["rows"] = {_enc_key(l): [_enc(x) for x in d.rows[l]] for l in d.poset}
        doc["cols"] = {_enc_key(l): [_enc(x) for x in d.cols[l]] for l in d.poset}
    doc["basis"] = [{"name": alg.names[i], "cell": _enc(l), "row": _enc(s), "col": _enc(t)}
                    for i, (l, s, t) in enumerate(alg.labels)]
    doc["products"] = [
        {"left": alg.names[i], "right": alg.names[j],
         "result": {alg.names[k]: _text(alg.field, c) for k, c in combo}}
        for (i, j), combo in sorted(alg.table.items())
    ]
    doc["unit"] = _combo_doc(alg, alg.unit)
    doc["involution"] = bool(alg.involutive)
    if ad is not None:
        doc["alpha"] = {
            "lambda_tilde": _poset_doc(ad.lambda_tilde),
            "lambda": [_enc(x) for x in ad.lambda_set],
            "idempotents": {_enc_key(k): _combo_doc(alg, v) for k, v in ad.idempotents.items()},
            "x": _poset_doc(ad.x_poset),
            "map": {_enc_key(k): _enc(v) for k, v in ad.alpha.items()},
        }
    return doc


def serialize(alg: Algebra, ad: AlphaDatum | None = None) -> bytes:
    return (json.dumps(to_document(alg, ad), indent=1, ensure_ascii=False) + "\n").encode("utf-8")


# -- changing to a cellular basis -----------------------------------------

def attach_datum(raw: Algebra, datum: CellDatum, assignment: Mapping, names: Mapping | None = None,
                 name: str = "") -> Algebra:
    """Re-express ``raw`` in the basis given by ``assignment``.

    ``assignment`` sends every label of ``datum`` to a coefficient vector
    in the basis of ``raw``; the vectors must form a basis.  Structure
    constants and the unit are recomputed by exact solving.
    """
    labels = datum.labels()
    vecs = [tuple(assignment[lab]) for lab in labels]
    if len(vecs) != raw.dim:
        raise ValueError(f"{len(vecs)} cell basis elements for an algebra of dimension {raw.dim}")
    try:
        coords = Coordinates(vecs, raw.dim, raw.field)
    except ValueError:
        raise ValueError("cell basis elements are linearly dependent") from None
    table = {}
    for a, va in enumerate(vecs):
        for b, vb in enumerate(vecs):
            c = coords(raw.mul_vec(va, vb))
            combo = {k: x for k, x in enumerate(c) if x}
            if combo:
                table[(a, b)] = combo
    unit = coords(raw.unit)
    nm = [names[lab] if names else f"c{i}" for i, lab in enumerate(labels)]
    return Algebra(raw.field, nm, table, unit, datum, name)


# -- matrix algebras --------------------------------------------------------

def build_matrix_algebra(n: int, b: int | None = None, field: Field = QQ) -> tuple[Algebra, AlphaDatum | None]:
    """The full matrix algebra of size n with one cell and the E_kk idempotents.

    With ``b`` given, alpha sends k >= b to "l" and k < b to "s" (l above s).
    """
    if n < 1:
        raise InputError("matrix size must be at least 1")
    if b is not None and not 1 < b <= n:
        raise InputError(f"b must satisfy 1 < b <= n, got b={b}, n={n}")
    top = str(n)
    idx = [str(i) for i in range(1, n + 1)]
    datum = CellDatum.cellular(Poset([top]), {top: idx})
    labels = datum.labels()
    names = [f"E{s},{t}" for (_, s, t) in labels]
    pos = {(s, t): i for i, (_, s, t) in enumerate(labels)}
    table = {}
    for (s, t), i in pos.items():
        for u in idx:
            table[(i, pos[(t, u)])] = {pos[(s, u)]: 1}
    unit = {pos[(k, k)]: 1 for k in idx}
    alg = Algebra(field, names, table, unit, datum, f"matrix:n={n}" + (f",b={b}" if b else ""))
    if b is None:
        return alg, None
    lt = Poset(idx, [(idx[i + 1], idx[i]) for i in range(n - 1)])
    idem = {k: alg.basis_vector(pos[(k, k)]) for k in idx}
    alpha = {k: ("l" if int(k) >= b else "s") for k in idx}
    return alg, AlphaDatum(lt, tuple(idx), idem, Poset(["l", "s"], [("l", "s")]), alpha)


# -- quiver algebras ---------------------------------------------------------

@dataclass(frozen=True)
class Path:
    """A path: a start vertex and a sequence of arrow names."""

    start: str
    arrows: tuple = ()

    def __len__(self):
        return len(self.arrows)


@dataclass
class QuiverPresentation:
    vertices: Sequence[str]
    arrows: Sequence[tuple]            # (name, source, target)
    relations: Sequence[Mapping]       # path text -> coefficient
    field: Field = QQ
    name: str = ""
    _arrow: dict = dc_field(default_factory=dict, repr=False)

    def __post_init__(self):
        self.vertices = tuple(self.vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise InputError("duplicate vertex")
        self.arrows = tuple(tuple(a) for a in self.arrows)
        self._arrow = {}
        for i, (nm, s, t) in enumerate(self.arrows):
            if nm in self._arrow:
                raise InputError(f"duplicate arrow {nm!r}")
            if s not in self.vertices or t not in self.vertices:
                raise InputError(f"arrow {nm!r} uses an unknown vertex")
            self._arrow[nm] = (i, s, t)
        self.relations = tuple(dict(r) for r in self.relations)
        for r in self.relations:
            ends = {self.endpoints(self.path(p)) for p in r}
            if len(ends) > 1:
                raise InputError(f"relation {r} mixes paths with different endpoints")

    def path(self, text: str) -> Path:
        text = text.strip()
        if text.startswith("@"):
            v = text[1:]
            if v not in self.vertices:
                raise InputError(f"unknown vertex in {text!r}")
            return Path(v)
        names = text.split()
        if not names:
            raise InputError("empty path")
        for nm in names:
            if nm not in self._arrow:
                raise InputError(f"unknown arrow {nm!r}")
        for a, b in zip(names, names[1:]):
            if self._arrow[a][2] != self._arrow[b][1]:
                raise InputError(f"path {text!r} is not composable at {a} {b}")
        return Path(self._arrow[names[0]][1], tuple(names))

    def endpoints(self, p: Path) -> tuple:
        if not p.arrows:
            return (p.start, p.start)
        return (p.start, self._arrow[p.arrows[-1]][2])

    def key(self, p: Path) -> tuple:
        """Rewriting order: arrow declaration indices, then length, then vertex."""
        return (tuple(self._arrow[a][0] for a in p.arrows), len(p), self.vertices.index(p.start))

    def path_name(self, p: Path) -> str:
        return "".join(p.arrows) if p.arrows else f"e{p.start}"

    def concat(self, p: Path, q: Path) -> Path | None:
        if self.endpoints(p)[1] != q.start:
            return None
        return Path(p.start, p.arrows + q.arrows)

    def paths_up_to(self, length: int) -> list[Path]:
        layer = [Path(v) for v in self.vertices]
        out = list(layer)
        for _ in range(length):
            nxt = []
            for p in layer:
                end = self.endpoints(p)[1]
                for nm, s, _t in self.arrows:
                    if s == end:
                        nxt.append(Path(p.start, p.arrows + (nm,)))
            out.extend(nxt)
            layer = nxt
        return out


@dataclass
class PathAlgebra:
    """A quiver algebra together with its normal-form machinery."""

    quiver: QuiverPresentation
    algebra: Algebra
    basis_paths: tuple
    cap: int
    _nf: dict = dc_field(repr=False, default_factory=dict)

    def normal_form(self, p: Path) -> dict:
        """Coefficients of p in the basis paths, as {basis position: coeff}."""
        if len(p) <= self.cap:
            return dict(self._nf[p])
        head = Path(p.start, p.arrows[:self.cap])
        rest = Path(self.quiver.endpoints(head)[1], p.arrows[self.cap:])
        out = {}
        f = self.quiver.field
        for k, c in self._nf[head].items():
            q = self.quiver.concat(self.basis_paths[k], rest)
            for k2, c2 in self.normal_form(q).items():
                out[k2] = out.get(k2, f.zero) + c * c2
        return {k: c for k, c in out.items() if c}

    def vector(self, text: str) -> tuple:
        v = self.algebra.zero_vector()
        for k, c in self.normal_form(self.quiver.path(text)).items():
            v[k] = c
        return tuple(v)


def build_path_algebra(q: QuiverPresentation, cap: int | None = None) -> PathAlgebra:
    """Basis and multiplication of the quiver algebra modulo its relations.

    All paths of length <= cap are spanned; the relations, multiplied on
    both sides by paths, span the ideal in that range.  Reducing that span
    with the largest path (in the rewriting order) as pivot turns every
    pivot path into a combination of smaller ones; the non-pivot paths are
    the basis.  The cap is adequate when every path of length exactly cap
    is a pivot, i.e. rewrites to shorter paths.
    """
    if cap is None:
        cap = 2 * len(q.vertices)
    f = q.field
    paths = q.paths_up_to(cap)
    order = sorted(paths, key=q.key, reverse=True)     # largest first
    col = {p: i for i, p in enumerate(order)}
    n = len(order)
    gens = []
    for r in q.relations:
        terms = [(q.path(t), f(Fraction(c.replace(" ", ""))) if isinstance(c, str) else f(c)) for t, c in r.items()]
        s, t = q.endpoints(terms[0][0])
        longest = max(len(p) for p, _ in terms)
        lefts = [p for p in paths if q.endpoints(p)[1] == s and len(p) + longest <= cap]
        rights = [p for p in paths if p.start == t and len(p) + longest <= cap]
        for lp in lefts:
            for rp in rights:
                if len(lp) + len(rp) + longest > cap:
                    continue
                row = [f.zero] * n
                for p, c in terms:
                    full = Path(lp.start, lp.arrows + p.arrows + rp.arrows)
                    row[col[full]] = row[col[full]] + c
                if any(row):
                    gens.append(row)
    piv = rref_rows(gens, n, f)
    pivot_row = {order[c]: gens[i] for i, c in enumerate(piv)}
    basis = [p for p in paths if p not in pivot_row]
    too_long = [p for p in basis if len(p) == cap]
    if too_long:
        raise NotFiniteWithinCapError(
            f"path {q.path_name(too_long[0])} of length {cap} does not reduce; raise the cap or check the relations")
    bpos = {p: i for i, p in enumerate(basis)}
    nf = {}
    for p in paths:
        if p in bpos:
            nf[p] = {bpos[p]: f.one}
        else:
            row = pivot_row[p]
            nf[p] = {bpos[order[c]]: -x for c, x in enumerate(row) if x and order[c] != p}
    names = [q.path_name(p) for p in basis]
    unit = {bpos[Path(v)]: 1 for v in q.vertices}
    pa = PathAlgebra(q, None, tuple(basis), cap, nf)
    table = {}
    for i, p in enumerate(basis):
        for j, r in enumerate(basis):
            c = q.concat(p, r)
            if c is None:
                continue
            combo = pa.normal_form(c)
            if combo:
                table[(i, j)] = combo
    pa.algebra = Algebra(f, names, table, unit, None, q.name)
    return pa


def parse_quiver(data) -> tuple[Algebra, AlphaDatum | None]:
    doc = _load_json(data)
    _validate(doc, QUIVER_SCHEMA)
    try:
        field = parse_field(doc.get("field", "rational"))
    except ValueError as exc:
        raise SchemaError(f"field: {exc}") from None
    q = QuiverPresentation(doc["vertices"], [(a["name"], a["source"], a["target"]) for a in doc["arrows"]],
                           doc["relations"], field, doc.get("name", ""))
    pa = build_path_algebra(q, doc.get("cap"))
    if "cells" not in doc:
        if "alpha" in doc:
            raise SchemaError("alpha needs a cell structure (cells, index_sets, cell_basis)")
        return pa.algebra, None
    if "index_sets" not in doc or "cell_basis" not in doc:
        raise SchemaError("cells need index_sets and cell_basis")
    poset = _poset(doc["cells"], "cells")
    t_sets = {_dec_key(k): [_dec(x) for x in v] for k, v in doc["index_sets"].items()}
    datum = CellDatum.cellular(poset, t_sets)
    assignment, names = {}, {}
    for n, cb in enumerate(doc["cell_basis"]):
        lab = (_dec(cb["cell"]), _dec(cb["row"]), _dec(cb["col"]))
        assignment[lab] = pa.vector(cb["path"])
        names[lab] = q.path_name(q.path(cb["path"]))
    alg = attach_datum(pa.algebra, datum, assignment, names, doc.get("name", ""))
    ad = _parse_alpha(doc["alpha"], {nm: i for i, nm in enumerate(alg.names)}, field) if "alpha" in doc else None
    return alg, ad


# -- the five-vertex example ------------------------------------------------

def path_quiver(field: Field = QQ) -> QuiverPresentation:
    """Five vertices in a line, arrows both ways, with the quadratic relations."""
    arrows = [("a12", "1", "2"), ("a21", "2", "1"), ("a23", "2", "3"), ("a32", "3", "2"),
              ("a34", "3", "4"), ("a43", "4", "3"), ("a45", "4", "5"), ("a54", "5", "4")]
    relations = [
        {"a12 a23": 1}, {"a23 a34": 1}, {"a34 a45": 1},
        {"a54 a43": 1}, {"a43 a32": 1}, {"a32 a21": 1},
        {"a21 a12": 1, "a23 a32": -1},
        {"a32 a23": 1, "a34 a43": -1},
        {"a43 a34": 1, "a45 a54": -1},
    ]
    return QuiverPresentation(["1", "2", "3", "4", "5"], arrows, relations, field, "path-example")


PATH_CELLS = ("l0", "l1", "l2", "l3", "l4", "l5")


def path_cell_paths() -> dict:
    """The path naming each cell basis element."""
    out = {("l0", "1", "1"): "a12 a21"}
    for i in range(1, 5):
        a, b = str(i), str(i + 1)
        lam = f"l{i}"
        out[(lam, a, a)] = f"@{a}"
        out[(lam, a, b)] = f"a{a}{b}"
        out[(lam, b, a)] = f"a{b}{a}"
        out[(lam, b, b)] = f"a{b}{a} a{a}{b}"
    out[("l5", "5", "5")] = "@5"
    return out


def build_paper_quiver_example(field: Field = QQ, cap: int = 3) -> tuple[Algebra, AlphaDatum]:
    """The 18-dimensional quiver algebra with its cell datum and alpha map."""
    q = path_quiver(field)
    pa = build_path_algebra(q, cap)
    poset = Poset(list(PATH_CELLS), [(PATH_CELLS[i], PATH_CELLS[i + 1]) for i in range(5)])
    t_sets = {"l0": ["1"], "l5": ["5"]}
    for i in range(1, 5):
        t_sets[f"l{i}"] = [str(i), str(i + 1)]
    datum = CellDatum.cellular(poset, t_sets)
    assignment, names = {}, {}
    for lab, text in path_cell_paths().items():
        assignment[lab] = pa.vector(text)
        names[lab] = q.path_name(q.path(text))
    alg = attach_datum(pa.algebra, datum, assignment, names, "path-example")
    # ambient order: l0 > l1 > 1 > l2 > 2 > ... > l5 > 5
    chain = ["l0"]
    for i in range(1, 6):
        chain += [f"l{i}", str(i)]
    lt = Poset(chain, list(zip(chain, chain[1:])))
    verts = tuple(str(i) for i in range(1, 6))
    idem = {v: alg.basis_vector(alg.index(f"e{v}")) for v in verts}
    xp = Poset(["t0", "t123", "t45"], [("t0", "t123"), ("t123", "t45")])
    alpha = {"l0": "t0", "l1": "t123", "l2": "t123", "l3": "t123", "l4": "t45", "l5": "t45",
             "1": "t123", "2": "t123", "3": "t123", "4": "t45", "5": "t45"}
    return alg, AlphaDatum(lt, verts, idem, xp, alpha)


# -- builtin names -------------------------------------------------------------

def builtin(spec: str, field: Field = QQ) -> tuple[Algebra, AlphaDatum | None]:
    """Resolve ``path-example``, ``path-example:alpha=constant`` or ``matrix:n=<n>[,b=<b>]``."""
    from .alpha import constant_alpha

    spec = spec.strip()
    if spec == "path-example":
        return build_paper_quiver_example(field)
    if spec == "path-example:alpha=constant":
        alg, ad = build_paper_quiver_example(field)
        return alg, constant_alpha(ad)
    if spec.startswith("matrix:"):
        params = {}
        for part in spec[len("matrix:"):].split(","):
            if "=" not in part:
                raise InputError(f"bad builtin parameter {part!r}")
            k, v = part.split("=", 1)
            try:
                params[k.strip()] = int(v)
            except ValueError:
                raise InputError(f"builtin parameter {k} must be an integer") from None
        if "n" not in params or set(params) - {"n", "b"}:
            raise InputError("matrix builtin takes n=<n> and optionally b=<b>")
        return build_matrix_algebra(params["n"], params.get("b"), field)
    raise InputError(f"unknown builtin {spec!r}")


def load(path: str, field: Field | None = None) -> tuple[Algebra, AlphaDatum | None]:
    """Read a ``.cell.json`` or ``.quiver.json`` file."""
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    if path.endswith(".quiver.json"):
        alg, ad = parse_quiver(data)
    else:
        alg, ad = parse(data)
    if field is not None and field != alg.field:
        alg = alg.to_field(field)
        ad = ad.to_field(field) if ad else None
    return alg, ad
