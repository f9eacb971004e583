"""Exact dense linear algebra over a :class:`~cellua.field.Field`.

Everything is built on one routine, :func:`rref`, which does column by
column Gauss-Jordan elimination taking the first nonzero entry as pivot.
The reduced echelon form is unique, so kernels and row-space bases come
out canonical and deterministic.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .field import Field, FieldMismatchError, QQ, field_of


class Matrix:
    """Immutable dense matrix with entries in a single field."""

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable], field: Field | None = None, ncols: int | None = None):
        raw = [list(r) for r in rows]
        if field is None:
            field = _guess_field(raw)
        conv = []
        for r in raw:
            conv.append(tuple(_convert(field, x) for x in r))
        if ncols is None:
            ncols = len(conv[0]) if conv else 0
        for r in conv:
            if len(r) != ncols:
                raise ValueError("ragged matrix rows")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", tuple(conv))
        object.__setattr__(self, "nrows", len(conv))
        object.__setattr__(self, "ncols", ncols)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def _raw(cls, rows, field, ncols):
        m = object.__new__(cls)
        object.__setattr__(m, "field", field)
        object.__setattr__(m, "rows", tuple(tuple(r) for r in rows))
        object.__setattr__(m, "nrows", len(m.rows))
        object.__setattr__(m, "ncols", ncols)
        return m

    @classmethod
    def zeros(cls, nrows: int, ncols: int, field: Field = QQ) -> "Matrix":
        z = field.zero
        return cls._raw([[z] * ncols for _ in range(nrows)], field, ncols)

    @classmethod
    def identity(cls, n: int, field: Field = QQ) -> "Matrix":
        z, o = field.zero, field.one
        return cls._raw([[o if i == j else z for j in range(n)] for i in range(n)], field, n)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __iter__(self):
        return iter(self.rows)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.rows, self.ncols))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"Matrix[{self.nrows}x{self.ncols}]({body})"

    @property
    def T(self) -> "Matrix":
        cols = [[r[j] for r in self.rows] for j in range(self.ncols)]
        return Matrix._raw(cols, self.field, self.nrows)

    def _check(self, other: "Matrix"):
        if self.field != other.field:
            raise FieldMismatchError(f"{self.field.name} vs {other.field.name}")

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        return Matrix._raw(matmul_rows(self.rows, other.rows, other.ncols, self.field), self.field, other.ncols)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix._raw([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
                           self.field, self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix._raw([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
                           self.field, self.ncols)

    def scale(self, c) -> "Matrix":
        c = self.field(c)
        return Matrix._raw([[c * a for a in r] for r in self.rows], self.field, self.ncols)

    def is_zero(self) -> bool:
        return all(not x for r in self.rows for x in r)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix._raw([[self.rows[i][j] for j in cols] for i in rows], self.field, len(cols))

    def apply(self, v: Sequence) -> tuple:
        """Matrix times column vector."""
        if len(v) != self.ncols:
            raise ValueError("dimension mismatch")
        z = self.field.zero
        out = []
        for r in self.rows:
            s = z
            for a, b in zip(r, v):
                if a and b:
                    s = s + a * b
            out.append(s)
        return tuple(out)

    def rank(self) -> int:
        return rank(self)

    def nullspace(self) -> list[tuple]:
        return nullspace(self)


def _guess_field(rows) -> Field:
    for r in rows:
        for x in r:
            if not (isinstance(x, int) and not isinstance(x, bool)):
                return field_of(x)
    return QQ


def _convert(field: Field, x):
    if field.contains(x):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return field(x)
    if field is QQ and isinstance(x, str):
        return field(x)
    # anything else (a foreign Fp, a Fraction going into F_p) is a mix-up
    raise FieldMismatchError(f"{x!r} is not an element of {field.name}")


def matmul_rows(a_rows, b_rows, ncols, field):
    z = field.zero
    out = []
    for r in a_rows:
        acc = [z] * ncols
        for k, a in enumerate(r):
            if not a:
                continue
            for j, b in enumerate(b_rows[k]):
                if b:
                    acc[j] = acc[j] + a * b
        out.append(acc)
    return out


def rref_rows(rows: list[list], ncols: int, field: Field, limit: int | None = None):
    """In-place Gauss-Jordan reduction of a list of mutable rows.

    Returns the pivot columns.  Rows end up in reduced echelon form with
    the zero rows at the bottom.  Pivots are only sought in the first
    ``limit`` columns; the rest are carried along.
    """
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols if limit is None else limit):
        if r == nrows:
            break
        p = None
        for i in range(r, nrows):
            if rows[i][c]:
                p = i
                break
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r]
        inv = field.one / piv[c]
        if piv[c] != field.one:
            for j in range(c, ncols):
                if piv[j]:
                    piv[j] = piv[j] * inv
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    row = rows[i]
                    for j in range(c, ncols):
                        if piv[j]:
                            row[j] = row[j] - f * piv[j]
        pivots.append(c)
        r += 1
    return pivots


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    rows = [list(r) for r in m.rows]
    piv = rref_rows(rows, m.ncols, m.field)
    return Matrix._raw(rows, m.field, m.ncols), piv


def rank(m: Matrix) -> int:
    rows = [list(r) for r in m.rows]
    return len(rref_rows(rows, m.ncols, m.field))


def nullspace(m: Matrix) -> list[tuple]:
    """Canonical kernel basis: one vector per free column, read off the RREF."""
    rows = [list(r) for r in m.rows]
    f = m.field
    piv = rref_rows(rows, m.ncols, f)
    free = [c for c in range(m.ncols) if c not in set(piv)]
    basis = []
    for fc in free:
        v = [f.zero] * m.ncols
        v[fc] = f.one
        for i, pc in enumerate(piv):
            v[pc] = -rows[i][fc]
        basis.append(tuple(v))
    return basis


def solve(m: Matrix, b: Sequence):
    """One solution x of m x = b, or ``None`` if the system is inconsistent."""
    if len(b) != m.nrows:
        raise ValueError(f"right-hand side has length {len(b)}, expected {m.nrows}")
    f = m.field
    rows = [list(r) + [_convert(f, x)] for r, x in zip(m.rows, b)]
    piv = rref_rows(rows, m.ncols + 1, f)
    if piv and piv[-1] == m.ncols:
        return None
    x = [f.zero] * m.ncols
    for i, pc in enumerate(piv):
        x[pc] = rows[i][m.ncols]
    return tuple(x)


# Row-space helpers.  A subspace of F^n is carried around as a tuple of
# row vectors in reduced echelon form; that representation is canonical,
# so two subspaces are equal exactly when their tuples are.

def row_basis(vectors: Iterable[Sequence], n: int, field: Field) -> tuple[tuple, ...]:
    rows = [list(v) for v in vectors]
    piv = rref_rows(rows, n, field)
    return tuple(tuple(rows[i]) for i in range(len(piv)))


def span_contains(basis: Sequence[Sequence], v: Sequence, field: Field) -> bool:
    n = len(v)
    return len(row_basis(list(basis) + [v], n, field)) == len(row_basis(basis, n, field))


def sum_spaces(a, b, n, field):
    return row_basis(list(a) + list(b), n, field)


def is_subspace(a, b, n, field) -> bool:
    """True if span(a) is contained in span(b)."""
    return len(row_basis(list(a) + list(b), n, field)) == len(row_basis(b, n, field))


def intersect_spaces(a, b, n, field) -> tuple[tuple, ...]:
    """Echelon basis of span(a) meet span(b)."""
    a = row_basis(a, n, field)
    b = row_basis(b, n, field)
    if not a or not b:
        return ()
    stacked = Matrix._raw([list(v) for v in a] + [list(v) for v in b], field, n)
    out = []
    for k in nullspace(stacked.T):
        v = [field.zero] * n
        for c, row in zip(k[:len(a)], a):
            if c:
                for j, x in enumerate(row):
                    if x:
                        v[j] = v[j] + c * x
        out.append(v)
    return row_basis(out, n, field)


def complement_from(space, candidates, n, field) -> list[tuple]:
    """Greedily pick candidates that extend ``space`` to a larger space.

    The picks are independent modulo ``space``; used both for choosing
    quotient coordinates and for extending a basis.
    """
    rows = [list(v) for v in space]
    r = len(rref_rows(rows, n, field))
    picked = []
    for c in candidates:
        trial = [list(v) for v in rows] + [list(c)]
        piv = rref_rows(trial, n, field)
        if len(piv) > r:
            picked.append(tuple(c))
            rows = [row for row in trial[:len(piv)]]
            r = len(piv)
    return picked


class Coordinates:
    """Coordinates with respect to a list of independent row vectors.

    ``coords(v)`` returns c with v = sum c_i basis_i, or raises if v is
    outside the span.
    """

    def __init__(self, basis: Sequence[Sequence], n: int, field: Field):
        self.basis = [tuple(b) for b in basis]
        self.n = n
        self.field = field
        k = len(self.basis)
        # reduce [B | I] so that each pivot row records which combination of
        # basis vectors produced it
        rows = []
        for i, b in enumerate(self.basis):
            rows.append(list(b) + [field.one if j == i else field.zero for j in range(k)])
        piv = rref_rows(rows, n + k, field, limit=n)
        if len(piv) != k:
            raise ValueError("basis vectors are linearly dependent")
        self._pivots = piv
        self._rows = rows

    def __call__(self, v: Sequence) -> tuple:
        f = self.field
        k = len(self.basis)
        c = [f.zero] * k
        residue = list(v)
        for row, pc in zip(self._rows, self._pivots):
            a = residue[pc]
            if not a:
                continue
            for j in range(pc, self.n):
                if row[j]:
                    residue[j] = residue[j] - a * row[j]
            for j in range(k):
                if row[self.n + j]:
                    c[j] = c[j] + a * row[self.n + j]
        if any(residue):
            raise ValueError("vector is not in the span")
        return tuple(c)


def vec_matmul(v: Sequence, m: Matrix) -> tuple:
    """Row vector times matrix."""
    f = m.field
    acc = [f.zero] * m.ncols
    for a, row in zip(v, m.rows):
        if not a:
            continue
        for j, b in enumerate(row):
            if b:
                acc[j] = acc[j] + a * b
    return tuple(acc)


def block_diag(blocks: Sequence[Matrix], field: Field) -> Matrix:
    n = sum(b.nrows for b in blocks)
    rows = [[field.zero] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, r in enumerate(b.rows):
            for j, x in enumerate(r):
                rows[off + i][off + j] = x
        off += b.nrows
    return Matrix._raw(rows, field, n)
