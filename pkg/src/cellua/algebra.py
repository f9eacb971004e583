"""Algebras given by structure constants, with a cell datum.

An algebra has a basis indexed by positions 0..dim-1 and a sparse table
``(i, j) -> {k: coeff}`` for the product of basis elements.  A cell datum
attaches to each position a label (cell, s, t) where the cell runs over a
poset and (s, t) over ``rows[cell] x cols[cell]``.  When rows and cols
agree the algebra is treated as cellular with the involution c_st -> c_ts;
otherwise it is only standardly based (one-sided triangular on each side).

Positions are ordered by a topological sort of the cell poset (larger
cells first, input order as tie-break) and then row-major inside a cell.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Mapping, Sequence

from .field import Field, FieldMismatchError
from .poset import Poset
from .report import Report, fmt_label


class NotCellularError(ValueError):
    """The cell structure constants fail the triangularity axiom."""


class AlgebraMismatchError(ValueError):
    pass


MAX_WITNESSES = 20


@dataclass(frozen=True)
class CellDatum:
    """Cell labels, their order, and the row/column index sets of each cell."""

    poset: Poset
    rows: Mapping[Hashable, tuple]
    cols: Mapping[Hashable, tuple]

    def __post_init__(self):
        object.__setattr__(self, "rows", {k: tuple(v) for k, v in self.rows.items()})
        object.__setattr__(self, "cols", {k: tuple(v) for k, v in self.cols.items()})
        for lam in self.poset:
            if lam not in self.rows or lam not in self.cols:
                raise ValueError(f"cell {fmt_label(lam)} has no index sets")
            if not self.rows[lam] or not self.cols[lam]:
                raise ValueError(f"cell {fmt_label(lam)} has an empty index set")
            for side in (self.rows[lam], self.cols[lam]):
                if len(set(side)) != len(side):
                    raise ValueError(f"cell {fmt_label(lam)} repeats an index")
        extra = (set(self.rows) | set(self.cols)) - set(self.poset)
        if extra:
            raise ValueError(f"index sets given for unknown cells {sorted(map(str, extra))}")

    @classmethod
    def cellular(cls, poset: Poset, t_sets: Mapping) -> "CellDatum":
        return cls(poset, dict(t_sets), dict(t_sets))

    @property
    def is_symmetric(self) -> bool:
        return all(self.rows[l] == self.cols[l] for l in self.poset)

    def cell_order(self) -> list:
        return self.poset.topological()

    def labels(self) -> list[tuple]:
        out = []
        for lam in self.cell_order():
            for s in self.rows[lam]:
                for t in self.cols[lam]:
                    out.append((lam, s, t))
        return out

    def star(self) -> "CellDatum":
        """The datum with rows and columns exchanged."""
        return CellDatum(self.poset, self.cols, self.rows)


class Algebra:
    """A finite-dimensional associative algebra given by structure constants.

    ``table`` maps (i, j) to a mapping k -> coefficient (missing key: zero
    product).  ``unit`` is the basis expansion of the identity, as a dense
    sequence or a mapping position -> coefficient.  Nothing about
    associativity or the unit is checked here; that is the job of
    :func:`verify_cellular`.
    """

    def __init__(self, field: Field, names: Sequence[str], table: Mapping, unit,
                 datum: CellDatum | None = None, name: str = "", involutive: bool | None = None,
                 parent: "Algebra | None" = None, parent_positions: Sequence[int] | None = None):
        self.field = field
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("basis names must be distinct")
        self.dim = len(self.names)
        self.name = name
        n = self.dim
        z = field.zero
        tab = {}
        for (i, j), combo in table.items():
            if not (0 <= i < n and 0 <= j < n):
                raise IndexError(f"product ({i}, {j}) outside the basis")
            entries = []
            for k, c in sorted(combo.items()):
                if not 0 <= k < n:
                    raise IndexError(f"product ({i}, {j}) has a term outside the basis")
                c = _scalar(field, c)
                if c:
                    entries.append((k, c))
            if entries:
                tab[(i, j)] = tuple(entries)
        self.table = tab
        if isinstance(unit, Mapping):
            u = [z] * n
            for k, c in unit.items():
                u[k] = _scalar(field, c)
            unit = u
        if len(unit) != n:
            raise ValueError("unit expansion has the wrong length")
        self.unit = tuple(_scalar(field, c) for c in unit)
        self.datum = datum
        self.labels: tuple = ()
        self.pos: dict = {}
        self.cell_of: tuple = ()
        if datum is not None:
            labels = datum.labels()
            if len(labels) != n:
                raise ValueError(f"cell datum has {len(labels)} positions but the basis has {n}")
            self.labels = tuple(labels)
            self.pos = {lab: i for i, lab in enumerate(labels)}
            self.cell_of = tuple(lab[0] for lab in labels)
        if involutive is None:
            involutive = datum is not None and datum.is_symmetric
        self.involutive = involutive
        self.parent = parent
        self.parent_positions = tuple(parent_positions) if parent_positions is not None else None
        self._name_index = {nm: i for i, nm in enumerate(self.names)}

    # -- basic access --------------------------------------------------

    def __repr__(self):
        return f"<Algebra {self.name or '?'} dim={self.dim} over {self.field.name}>"

    def index(self, name: str) -> int:
        return self._name_index[name]

    def __getitem__(self, name: str) -> "Element":
        return self.basis_element(self.index(name))

    def zero_vector(self) -> list:
        return [self.field.zero] * self.dim

    def basis_vector(self, i: int) -> tuple:
        v = self.zero_vector()
        v[i] = self.field.one
        return tuple(v)

    def basis_element(self, i: int) -> "Element":
        return Element(self, self.basis_vector(i))

    def element(self, coeffs) -> "Element":
        if isinstance(coeffs, Mapping):
            v = self.zero_vector()
            for k, c in coeffs.items():
                k = self.index(k) if isinstance(k, str) else k
                v[k] = v[k] + _scalar(self.field, c)
            coeffs = v
        return Element(self, tuple(_scalar(self.field, c) for c in coeffs))

    @property
    def one(self) -> "Element":
        return Element(self, self.unit)

    def cell(self, lam) -> list[int]:
        return [i for i, l in enumerate(self.cell_of) if l == lam]

    # -- multiplication ------------------------------------------------

    def product_basis(self, i: int, j: int) -> tuple:
        return self.table.get((i, j), ())

    def mul_vec(self, a: Sequence, b: Sequence) -> tuple:
        out = self.zero_vector()
        nz_b = [(j, y) for j, y in enumerate(b) if y]
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in nz_b:
                for k, c in self.table.get((i, j), ()):
                    out[k] = out[k] + x * y * c
        return tuple(out)

    def basis_times(self, i: int, b: Sequence) -> tuple:
        out = self.zero_vector()
        for j, y in enumerate(b):
            if y:
                for k, c in self.table.get((i, j), ()):
                    out[k] = out[k] + y * c
        return tuple(out)

    def times_basis(self, a: Sequence, j: int) -> tuple:
        out = self.zero_vector()
        for i, x in enumerate(a):
            if x:
                for k, c in self.table.get((i, j), ()):
                    out[k] = out[k] + x * c
        return tuple(out)

    # -- involution ----------------------------------------------------

    def involution_perm(self) -> tuple[int, ...]:
        if not self.involutive:
            raise NotCellularError("algebra has no cellular involution")
        return tuple(self.pos[(lam, t, s)] for (lam, s, t) in self.labels)

    def involution_vec(self, a: Sequence) -> tuple:
        perm = self.involution_perm()
        out = self.zero_vector()
        for i, x in enumerate(a):
            out[perm[i]] = x
        return tuple(out)

    # -- structure -----------------------------------------------------

    def ideal_above(self, lam) -> list[int]:
        """Positions of all c^mu_st with mu > lam."""
        if self.datum is None or lam not in self.datum.poset:
            raise KeyError(f"unknown cell {fmt_label(lam)}")
        gt = self.datum.poset.gt
        return [i for i, mu in enumerate(self.cell_of) if gt(mu, lam)]

    def to_field(self, field: Field) -> "Algebra":
        """The same structure constants read in another field."""
        conv = _converter(self.field, field)
        table = {ij: {k: conv(c) for k, c in combo} for ij, combo in self.table.items()}
        return Algebra(field, self.names, table, [conv(c) for c in self.unit], self.datum,
                       self.name, self.involutive, self.parent, self.parent_positions)

    def same_structure(self, other: "Algebra") -> bool:
        return (self.field == other.field and self.names == other.names and self.table == other.table
                and self.unit == other.unit and self.labels == other.labels
                and self.involutive == other.involutive
                and (self.datum is None) == (other.datum is None)
                and (self.datum is None or self.datum.poset == other.datum.poset))


class Element:
    """An algebra element as a dense coefficient tuple."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: Algebra, coeffs: Sequence):
        self.algebra = algebra
        self.coeffs = tuple(coeffs)

    def _same(self, other):
        if not isinstance(other, Element):
            return False
        if other.algebra is not self.algebra:
            raise AlgebraMismatchError("elements of different algebras")
        return True

    def __add__(self, other):
        if not self._same(other):
            return NotImplemented
        return Element(self.algebra, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        if not self._same(other):
            return NotImplemented
        return Element(self.algebra, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return Element(self.algebra, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, Element):
            self._same(other)
            return Element(self.algebra, self.algebra.mul_vec(self.coeffs, other.coeffs))
        c = _scalar(self.algebra.field, other)
        return Element(self.algebra, [c * a for a in self.coeffs])

    def __rmul__(self, other):
        c = _scalar(self.algebra.field, other)
        return Element(self.algebra, [c * a for a in self.coeffs])

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.algebra is other.algebra and self.coeffs == other.coeffs
        if other == 0:
            return not any(self.coeffs)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def star(self) -> "Element":
        return Element(self.algebra, self.algebra.involution_vec(self.coeffs))

    def support(self) -> dict:
        return {i: c for i, c in enumerate(self.coeffs) if c}

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                nm = self.algebra.names[i]
                terms.append(nm if c == 1 else f"{c}*{nm}")
        return " + ".join(terms) if terms else "0"


def multiply(a: Element, b: Element) -> Element:
    return a * b


def involution(a: Element) -> Element:
    return a.star()


def _scalar(field: Field, c):
    if field.contains(c):
        return c
    if isinstance(c, (int, str)) and not isinstance(c, bool):
        return field(c)
    raise FieldMismatchError(f"{c!r} is not an element of {field.name}")


def _converter(src: Field, dst: Field):
    if src == dst:
        return lambda c: c
    if src.characteristic == 0:
        return dst
    if dst.characteristic == 0:
        raise FieldMismatchError(f"cannot lift {src.name} scalars to {dst.name}")
    raise FieldMismatchError(f"cannot convert {src.name} to {dst.name}")


# -- cell coefficients ---------------------------------------------------

def _as_vec(alg: Algebra, a) -> tuple:
    if isinstance(a, Element):
        if a.algebra is not alg:
            raise AlgebraMismatchError("element belongs to another algebra")
        return a.coeffs
    if isinstance(a, int) and not isinstance(a, bool):
        return alg.basis_vector(a)
    if len(a) != alg.dim:
        raise ValueError("coefficient vector has the wrong length")
    return tuple(a)


def _right_once(alg: Algebra, lam, s, t, a) -> dict:
    """Coefficients r_v with c_st a = sum r_v c_sv mod higher cells."""
    gt = alg.datum.poset.gt
    p = alg.basis_times(alg.pos[(lam, s, t)], a)
    out = {}
    for k, c in enumerate(p):
        if not c:
            continue
        mu, s2, v = alg.labels[k]
        if mu != lam and gt(mu, lam):
            continue
        if mu == lam and s2 == s:
            out[v] = c
            continue
        raise NotCellularError(
            f"c[{fmt_label(lam)};{s},{t}] * a has term {alg.names[k]} outside row {s} mod higher cells")
    return out


def _left_once(alg: Algebra, lam, s, t, a) -> dict:
    gt = alg.datum.poset.gt
    p = alg.times_basis(a, alg.pos[(lam, s, t)])
    out = {}
    for k, c in enumerate(p):
        if not c:
            continue
        mu, u, t2 = alg.labels[k]
        if mu != lam and gt(mu, lam):
            continue
        if mu == lam and t2 == t:
            out[u] = c
            continue
        raise NotCellularError(
            f"a * c[{fmt_label(lam)};{s},{t}] has term {alg.names[k]} outside column {t} mod higher cells")
    return out


def right_coefficients(alg: Algebra, lam, t, a) -> dict:
    """r_v^{(t,a)} for c_st a, computed for every s and required to agree."""
    a = _as_vec(alg, a)
    rows = alg.datum.rows[lam]
    if t not in alg.datum.cols[lam]:
        raise KeyError(f"{t!r} is not a column index of {fmt_label(lam)}")
    first = _right_once(alg, lam, rows[0], t, a)
    for s in rows[1:]:
        other = _right_once(alg, lam, s, t, a)
        if other != first:
            raise NotCellularError(
                f"right coefficients of c[{fmt_label(lam)};*,{t}] depend on the row: "
                f"s={rows[0]} gives {_fmt(first)}, s={s} gives {_fmt(other)}")
    return {v: first.get(v, alg.field.zero) for v in alg.datum.cols[lam]}


def left_coefficients(alg: Algebra, lam, s, a) -> dict:
    """r_u^{(a,s)} for a c_st, computed for every t and required to agree."""
    a = _as_vec(alg, a)
    cols = alg.datum.cols[lam]
    if s not in alg.datum.rows[lam]:
        raise KeyError(f"{s!r} is not a row index of {fmt_label(lam)}")
    first = _left_once(alg, lam, s, cols[0], a)
    for t in cols[1:]:
        other = _left_once(alg, lam, s, t, a)
        if other != first:
            raise NotCellularError(
                f"left coefficients of c[{fmt_label(lam)};{s},*] depend on the column: "
                f"t={cols[0]} gives {_fmt(first)}, t={t} gives {_fmt(other)}")
    return {u: first.get(u, alg.field.zero) for u in alg.datum.rows[lam]}


def cell_coefficients(alg: Algebra, lam, t, a) -> dict:
    return right_coefficients(alg, lam, t, a)


def _fmt(d: dict) -> str:
    return "{" + ", ".join(f"{k}: {v}" for k, v in d.items()) + "}"


# -- verification --------------------------------------------------------

class _Collector:
    def __init__(self):
        self.items: dict[str, list] = {}

    def hit(self, tag, labels, detail):
        self.items.setdefault(tag, []).append((labels, detail))

    def flush(self, report: Report, tag: str):
        bad = self.items.get(tag, [])
        if not bad:
            report.add(tag, "all", True)
            return
        for labels, detail in bad[:MAX_WITNESSES]:
            report.add(tag, labels, False, detail)
        if len(bad) > MAX_WITNESSES:
            report.note(f"{tag}: {len(bad) - MAX_WITNESSES} further violations not listed")


def check_unit(alg: Algebra, out: _Collector):
    u = alg.unit
    for i in range(alg.dim):
        e = alg.basis_vector(i)
        if alg.mul_vec(u, e) != e:
            out.hit("unit", alg.names[i], f"1 * {alg.names[i]} != {alg.names[i]}")
        if alg.mul_vec(e, u) != e:
            out.hit("unit", alg.names[i], f"{alg.names[i]} * 1 != {alg.names[i]}")


def check_associative(alg: Algebra, out: _Collector):
    n = alg.dim
    # products c_i c_j as dense vectors, computed once
    prods = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            v = alg.zero_vector()
            for k, c in alg.table.get((i, j), ()):
                v[k] = c
            prods[i][j] = v
    for i in range(n):
        for j in range(n):
            ij = prods[i][j]
            for k in range(n):
                left = alg.times_basis(ij, k)
                right = alg.basis_times(i, prods[j][k])
                if left != right:
                    nm = alg.names
                    out.hit("associative", f"{nm[i]}:{nm[j]}:{nm[k]}",
                            f"({nm[i]} {nm[j]}) {nm[k]} != {nm[i]} ({nm[j]} {nm[k]})")


def check_anti_automorphism(alg: Algebra, out: _Collector):
    perm = alg.involution_perm()
    for i in range(alg.dim):
        for j in range(alg.dim):
            lhs = alg.involution_vec(_dense(alg, alg.table.get((i, j), ())))
            rhs = _dense(alg, alg.table.get((perm[j], perm[i]), ()))
            if lhs != rhs:
                nm = alg.names
                out.hit("anti-automorphism", f"{nm[i]}:{nm[j]}", f"({nm[i]} {nm[j]})* != {nm[j]}* {nm[i]}*")


def _dense(alg, combo):
    v = alg.zero_vector()
    for k, c in combo:
        v[k] = c
    return tuple(v)


def check_triangular(alg: Algebra, out: _Collector, side: str):
    tag = "right-triangular" if side == "right" else "left-triangular"
    d = alg.datum
    for lam in d.cell_order():
        fixed_set = d.cols[lam] if side == "right" else d.rows[lam]
        for fixed in fixed_set:
            for j in range(alg.dim):
                a = alg.basis_vector(j)
                try:
                    if side == "right":
                        right_coefficients(alg, lam, fixed, a)
                    else:
                        left_coefficients(alg, lam, fixed, a)
                except NotCellularError as exc:
                    out.hit(tag, f"{fmt_label(lam)}:{fixed}:{alg.names[j]}", str(exc))


def check_ideals(alg: Algebra, out: _Collector):
    for lam in alg.datum.cell_order():
        ideal = set(alg.ideal_above(lam))
        for i in ideal:
            for j in range(alg.dim):
                for (a, b) in ((i, j), (j, i)):
                    for k, _ in alg.table.get((a, b), ()):
                        if k not in ideal:
                            out.hit("ideal", f"{fmt_label(lam)}:{alg.names[a]}:{alg.names[b]}",
                                    f"{alg.names[a]} {alg.names[b]} leaves the ideal above {fmt_label(lam)}")
                            break


def verify_cellular(alg: Algebra) -> Report:
    """Exhaustive check of the algebra and cell axioms.

    Covers the unit, associativity, the involution being an
    anti-automorphism (cellular case), triangularity of right and left
    multiplication on every basis element with coefficients independent of
    the spectator index, and the spans of higher cells being two-sided
    ideals.  For a standardly based algebra (rows != cols) the involution
    check is skipped.
    """
    report = Report()
    out = _Collector()
    check_unit(alg, out)
    out.flush(report, "unit")
    check_associative(alg, out)
    out.flush(report, "associative")
    if alg.datum is None:
        report.add("cell-datum", "-", False, "algebra carries no cell datum")
        return report
    if alg.involutive:
        check_anti_automorphism(alg, out)
        out.flush(report, "anti-automorphism")
    check_triangular(alg, out, "right")
    out.flush(report, "right-triangular")
    check_triangular(alg, out, "left")
    out.flush(report, "left-triangular")
    check_ideals(alg, out)
    out.flush(report, "ideal")
    return report


def verify_standardly_based(alg: Algebra) -> Report:
    return verify_cellular(alg)


# -- sub and quotient algebras on basis subsets ---------------------------

class ClosureError(ValueError):
    """A span of basis elements is not closed under the operation asked for."""


def subalgebra(alg: Algebra, datum: CellDatum, label_map, name: str = "") -> Algebra:
    """The span of a subset of the basis, re-indexed by a new cell datum.

    ``label_map`` sends each label of the new datum to the position in
    ``alg`` that it names.  The span must be closed under multiplication
    and contain the unit.
    """
    labels = datum.labels()
    positions = [label_map(lab) for lab in labels]
    if len(set(positions)) != len(positions):
        raise ClosureError("two new basis labels name the same element")
    back = {p: i for i, p in enumerate(positions)}
    table = {}
    for a, i in enumerate(positions):
        for b, j in enumerate(positions):
            combo = {}
            for k, c in alg.table.get((i, j), ()):
                if k not in back:
                    raise ClosureError(f"{alg.names[i]} * {alg.names[j]} has term {alg.names[k]} outside the span")
                combo[back[k]] = c
            if combo:
                table[(a, b)] = combo
    unit = {}
    for k, c in enumerate(alg.unit):
        if c:
            if k not in back:
                raise ClosureError(f"unit has term {alg.names[k]} outside the span")
            unit[back[k]] = c
    return Algebra(alg.field, [alg.names[p] for p in positions], table, unit, datum, name,
                   parent=alg, parent_positions=positions)


def quotient_by_cells(alg: Algebra, ideal_positions, datum: CellDatum, label_map, name: str = "") -> Algebra:
    """Quotient by the span of the basis elements in ``ideal_positions``.

    The span must be a two-sided ideal.  The remaining basis elements are
    re-indexed through ``label_map`` like :func:`subalgebra`.
    """
    ideal = set(ideal_positions)
    for i in ideal:
        for j in range(alg.dim):
            for a, b in ((i, j), (j, i)):
                for k, _ in alg.table.get((a, b), ()):
                    if k not in ideal:
                        raise ClosureError(f"{alg.names[a]} * {alg.names[b]} leaves the ideal")
    labels = datum.labels()
    positions = [label_map(lab) for lab in labels]
    if set(positions) & ideal or len(set(positions)) + len(ideal) != alg.dim:
        raise ClosureError("new basis does not complement the ideal")
    back = {p: i for i, p in enumerate(positions)}
    table = {}
    for a, i in enumerate(positions):
        for b, j in enumerate(positions):
            combo = {back[k]: c for k, c in alg.table.get((i, j), ()) if k not in ideal}
            if combo:
                table[(a, b)] = combo
    unit = {back[k]: c for k, c in enumerate(alg.unit) if c and k not in ideal}
    return Algebra(alg.field, [alg.names[p] for p in positions], table, unit, datum, name,
                   parent=alg, parent_positions=positions)


def relabel(alg: Algebra, datum: CellDatum, label_map, name: str = "") -> Algebra:
    """Same algebra, basis permuted according to a new datum."""
    return subalgebra(alg, datum, label_map, name)
