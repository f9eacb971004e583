"""Standard and simple modules, bilinear forms, module maps.

A module over an algebra is stored as one matrix per basis element.  The
``action`` matrices follow the usual conventions (a right module acts on
row vectors, v -> v A; a left module on column vectors, v -> A v).
Internally everything is done with row vectors: ``row_op(i)`` is the
matrix R with (c_i acting on v) = v R, which is ``action[i]`` for right
modules and its transpose for left ones.  Submodules, quotients and
module maps then look the same on both sides.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Hashable, Sequence

from .algebra import Algebra, CellDatum, NotCellularError, left_coefficients, right_coefficients, \
    quotient_by_cells
from .linalg import Coordinates, Matrix, complement_from, matmul_rows, rank, nullspace, row_basis, \
    vec_matmul
from .report import Report, fmt_label

RIGHT, LEFT = "right", "left"


class SideMismatchError(ValueError):
    pass


class NotSaturatedError(ValueError):
    def __init__(self, bigger, smaller):
        super().__init__(f"{fmt_label(bigger)} > {fmt_label(smaller)} but only the smaller one is in the set")
        self.witness = (bigger, smaller)


@dataclass(frozen=True, eq=False)
class CellModule:
    algebra: Algebra
    label: Hashable
    side: str
    basis_labels: tuple
    action: tuple            # Matrix per algebra basis position
    kind: str = ""

    @property
    def dim(self) -> int:
        return len(self.basis_labels)

    @property
    def field(self):
        return self.algebra.field

    @cached_property
    def _row_ops(self) -> tuple:
        if self.side == RIGHT:
            return tuple(self.action)
        return tuple(m.T for m in self.action)

    def row_op(self, i: int) -> Matrix:
        return self._row_ops[i]

    def row_op_of(self, a: Sequence) -> Matrix:
        """Row operator of an arbitrary algebra element."""
        n = self.dim
        f = self.field
        acc = [[f.zero] * n for _ in range(n)]
        for i, x in enumerate(a):
            if not x:
                continue
            for r, row in enumerate(self._row_ops[i].rows):
                for c, y in enumerate(row):
                    if y:
                        acc[r][c] = acc[r][c] + x * y
        return Matrix._raw(acc, f, n)

    def act(self, v: Sequence, i: int) -> tuple:
        return vec_matmul(v, self._row_ops[i])

    def name(self) -> str:
        prefix = "#" if self.side == LEFT else ""
        return f"{prefix}{self.kind or 'M'}{fmt_label(self.label)}"

    def __repr__(self):
        return f"<{self.side} module {self.name()} dim={self.dim}>"


def module_from_row_ops(alg: Algebra, label, side: str, basis_labels, row_ops, kind="") -> CellModule:
    if side == RIGHT:
        action = tuple(row_ops)
    else:
        action = tuple(m.T for m in row_ops)
    return CellModule(alg, label, side, tuple(basis_labels), action, kind)


def representation_failures(m: CellModule) -> list[str]:
    """Basis pairs (i, j) where the action does not respect c_i c_j."""
    alg = m.algebra
    bad = []
    n = m.dim
    f = alg.field
    ident = Matrix.identity(n, f)
    if m.row_op_of(alg.unit) != ident:
        bad.append("unit")
    acts = m.action
    for i in range(alg.dim):
        for j in range(alg.dim):
            lhs = matmul_rows(acts[i].rows, acts[j].rows, n, f) if n else []
            rhs = [[f.zero] * n for _ in range(n)]
            for k, c in alg.table.get((i, j), ()):
                for r, row in enumerate(acts[k].rows):
                    for col, y in enumerate(row):
                        if y:
                            rhs[r][col] = rhs[r][col] + c * y
            if [list(r) for r in lhs] != rhs:
                bad.append(f"{alg.names[i]}*{alg.names[j]}")
    return bad


# -- standard modules -------------------------------------------------------

def standard_module(alg: Algebra, lam, side: str = RIGHT, check: bool = True) -> CellModule:
    """The cell module of ``lam`` on the column indices (right) or row indices (left)."""
    d = alg.datum
    if lam not in d.poset:
        raise KeyError(f"unknown cell {fmt_label(lam)}")
    f = alg.field
    action = []
    if side == RIGHT:
        idx = d.cols[lam]
        for j in range(alg.dim):
            a = alg.basis_vector(j)
            rows = []
            for t in idx:
                r = right_coefficients(alg, lam, t, a)
                rows.append([r[v] for v in idx])
            action.append(Matrix._raw(rows, f, len(idx)))
    elif side == LEFT:
        idx = d.rows[lam]
        for j in range(alg.dim):
            a = alg.basis_vector(j)
            cols = [left_coefficients(alg, lam, s, a) for s in idx]
            action.append(Matrix._raw([[cols[c][u] for c in range(len(idx))] for u in idx], f, len(idx)))
    else:
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    m = CellModule(alg, lam, side, tuple(idx), tuple(action), "W")
    if check:
        bad = representation_failures(m)
        if bad:
            raise NotCellularError(f"{m.name()} is not a module: fails on {bad[0]}")
    return m


# -- forms --------------------------------------------------------------------

def pairing(alg: Algebra, lam) -> Matrix:
    """K[x][y] = coefficient of c_uv in c_ux c_yv modulo higher cells.

    x runs over the column indices and y over the row indices of the cell.
    The value is computed at the first (u, v) and required to be the same
    for every other choice, with no stray terms.  For a cellular algebra
    K is the Gram matrix; for a standardly based one, K transposed is the
    form pairing left and right standard modules.
    """
    d = alg.datum
    rows, cols = d.rows[lam], d.cols[lam]
    gt = d.poset.gt
    f = alg.field
    ref = None
    for u in rows:
        for v in cols:
            K = []
            for x in cols:
                line = []
                for y in rows:
                    p = alg.mul_vec(alg.basis_vector(alg.pos[(lam, u, x)]), alg.basis_vector(alg.pos[(lam, y, v)]))
                    coeff = f.zero
                    for k, c in enumerate(p):
                        if not c:
                            continue
                        mu, s2, t2 = alg.labels[k]
                        if mu != lam and gt(mu, lam):
                            continue
                        if (mu, s2, t2) == (lam, u, v):
                            coeff = c
                            continue
                        raise NotCellularError(
                            f"c[{u},{x}] c[{y},{v}] in cell {fmt_label(lam)} has stray term {alg.names[k]}")
                    line.append(coeff)
                K.append(line)
            if ref is None:
                ref = K
            elif K != ref:
                raise NotCellularError(f"form of cell {fmt_label(lam)} depends on (u, v) = ({u}, {v})")
    return Matrix._raw(ref, f, len(rows))


@dataclass(frozen=True)
class GramForm:
    label: Hashable
    matrix: Matrix
    basis_labels: tuple

    @property
    def rank(self) -> int:
        return rank(self.matrix)


def gram(alg: Algebra, lam) -> GramForm:
    """The symmetric form on the cell module of a cellular algebra."""
    if not alg.involutive:
        raise NotCellularError("gram needs a cellular algebra; use beta for standardly based ones")
    return GramForm(lam, pairing(alg, lam), alg.datum.cols[lam])


def beta(alg: Algebra, lam) -> Matrix:
    """B[s][t] pairing left basis vector s with right basis vector t."""
    return pairing(alg, lam).T


def radical_vectors(alg: Algebra, lam, side: str = RIGHT) -> list[tuple]:
    """Basis of the radical of the form inside the standard module."""
    K = pairing(alg, lam)
    if side == RIGHT:
        return nullspace(K.T)
    return nullspace(K)


def simple_dimension(alg: Algebra, lam) -> int:
    return rank(pairing(alg, lam))


def nonzero_simples(alg: Algebra) -> list:
    """Cell labels whose simple head is nonzero, in poset order."""
    return [lam for lam in alg.datum.poset if simple_dimension(alg, lam) > 0]


lambda_plus_zero = nonzero_simples


def simple_module(alg: Algebra, lam, side: str = RIGHT, standard: CellModule | None = None) -> CellModule:
    """Standard module modulo the radical of its form.

    Coordinates are the first standard basis vectors that complement the
    radical.
    """
    w = standard or standard_module(alg, lam, side)
    rad = radical_vectors(alg, lam, side)
    n = w.dim
    f = alg.field
    units = [tuple(f.one if i == j else f.zero for j in range(n)) for i in range(n)]
    q = subquotient(w, rad, units, candidates=units)
    return CellModule(alg, lam, side, q.basis_labels, q.action, "L")


# -- generic module operations ----------------------------------------------

def spin(m: CellModule, vectors: Sequence[Sequence]) -> tuple:
    """Echelon basis of the submodule generated by ``vectors``."""
    f = m.field
    n = m.dim
    basis = row_basis(vectors, n, f)
    frontier = list(basis)
    while frontier:
        new = []
        for v in frontier:
            for i in range(m.algebra.dim):
                new.append(m.act(v, i))
        grown = row_basis(list(basis) + new, n, f)
        if len(grown) == len(basis):
            break
        basis = grown
        frontier = list(grown)
    return basis


def subquotient(m: CellModule, lower: Sequence, upper: Sequence, candidates: Sequence | None = None,
                label=None, kind: str | None = None) -> CellModule:
    """The module span(upper) / span(lower), assuming lower <= upper are submodules.

    Quotient coordinates are the first ``candidates`` (default: the given
    ``upper`` vectors) that are independent modulo ``lower``.
    """
    f = m.field
    n = m.dim
    low = row_basis(lower, n, f)
    comp = complement_from(low, candidates if candidates is not None else upper, n, f)
    up_dim = len(row_basis(list(low) + list(upper), n, f))
    if len(low) + len(comp) != up_dim:
        raise ValueError("candidates do not span the quotient")
    coords = Coordinates(list(low) + comp, n, f)
    k = len(comp)
    ops = []
    for i in range(m.algebra.dim):
        R = m.row_op(i)
        rows = []
        for c in comp:
            w = vec_matmul(c, R)
            rows.append(coords(w)[len(low):])
        ops.append(Matrix._raw(rows, f, k))
    labels = tuple(_coord_label(c, m.basis_labels) for c in comp)
    return module_from_row_ops(m.algebra, m.label if label is None else label, m.side, labels, ops,
                               m.kind if kind is None else kind)


def _coord_label(v, labels):
    nz = [i for i, x in enumerate(v) if x]
    if len(nz) == 1 and v[nz[0]] == 1:
        return labels[nz[0]]
    return tuple(str(x) for x in v)


def direct_sum(ms: Sequence[CellModule], label=None, kind="") -> CellModule:
    alg = ms[0].algebra
    for m in ms:
        if m.algebra is not alg or m.side != ms[0].side:
            raise SideMismatchError("direct sum of modules over different algebras or sides")
    f = alg.field
    n = sum(m.dim for m in ms)
    action = []
    for i in range(alg.dim):
        rows = [[f.zero] * n for _ in range(n)]
        off = 0
        for m in ms:
            for r, row in enumerate(m.action[i].rows):
                for c, x in enumerate(row):
                    rows[off + r][off + c] = x
            off += m.dim
        action.append(Matrix._raw(rows, f, n))
    labels = tuple(lab for m in ms for lab in m.basis_labels)
    return CellModule(alg, label, ms[0].side, labels, tuple(action), kind)


def restrict(m: CellModule, sub: Algebra, positions: Sequence[int]) -> CellModule:
    """View a module over a subalgebra whose basis sits at ``positions``."""
    return CellModule(sub, m.label, m.side, m.basis_labels, tuple(m.action[p] for p in positions), m.kind)


def inflate(m: CellModule, big: Algebra, lift: Sequence[int]) -> CellModule:
    """Pull back along a quotient big -> m.algebra.

    ``lift[k]`` is the position in ``big`` of the k-th basis element of the
    quotient; every other basis element of ``big`` lies in the kernel.
    """
    f = big.field
    zero = Matrix.zeros(m.dim, m.dim, f)
    back = {p: k for k, p in enumerate(lift)}
    action = tuple(m.action[back[j]] if j in back else zero for j in range(big.dim))
    return CellModule(big, m.label, m.side, m.basis_labels, action, m.kind)


def equivariance_failures(src: CellModule, tgt: CellModule, F: Matrix) -> list[int]:
    """Basis positions a where the row-form map F fails to commute with a."""
    if src.algebra is not tgt.algebra:
        raise ValueError("maps compare modules over the same algebra")
    if src.side != tgt.side:
        raise SideMismatchError("module map between different sides")
    if F.shape != (src.dim, tgt.dim):
        raise ValueError(f"map has shape {F.shape}, expected {(src.dim, tgt.dim)}")
    bad = []
    for i in range(src.algebra.dim):
        if src.dim == 0 or tgt.dim == 0:
            continue
        if src.row_op(i) @ F != F @ tgt.row_op(i):
            bad.append(i)
    return bad


def image_space(F: Matrix, vectors) -> tuple:
    return row_basis([vec_matmul(v, F) for v in vectors], F.ncols, F.field)


def preimage_space(F: Matrix, target_vectors) -> tuple:
    """All v with v F in span(target_vectors)."""
    f = F.field
    tb = row_basis(target_vectors, F.ncols, f)
    # v F + w T = 0 with unknowns (v, w): kernel of the stacked matrix
    stacked = Matrix._raw([list(r) for r in F.rows] + [list(r) for r in tb], f, F.ncols)
    ker = nullspace(stacked.T)
    return row_basis([k[:F.nrows] for k in ker], F.nrows, f)


def basis_map(src_labels, tgt_labels, pairs, field) -> Matrix:
    """0/1 matrix sending src basis label a to tgt basis label b for each (a, b)."""
    si = {l: i for i, l in enumerate(src_labels)}
    ti = {l: i for i, l in enumerate(tgt_labels)}
    rows = [[field.zero] * len(tgt_labels) for _ in src_labels]
    for a, b in pairs:
        rows[si[a]][ti[b]] = field.one
    return Matrix._raw(rows, field, len(tgt_labels))


# -- embedding and quotients of cellular algebras ------------------------------

def regular_quotient_module(alg: Algebra, ideal: Sequence[int]) -> CellModule:
    """A / span(ideal) as a right module, on the remaining basis positions."""
    drop = set(ideal)
    keep = [i for i in range(alg.dim) if i not in drop]
    where = {p: r for r, p in enumerate(keep)}
    f = alg.field
    action = []
    for j in range(alg.dim):
        rows = [[f.zero] * len(keep) for _ in keep]
        for r, i in enumerate(keep):
            for k, c in alg.table.get((i, j), ()):
                if k in where:
                    rows[r][where[k]] = c
        action.append(Matrix._raw(rows, f, len(keep)))
    return CellModule(alg, "A/I", RIGHT, tuple(alg.names[i] for i in keep), tuple(action), "A")


def regular_module(alg: Algebra, side: str = RIGHT) -> CellModule:
    f = alg.field
    n = alg.dim
    ops = []
    for j in range(n):
        rows = [[f.zero] * n for _ in range(n)]
        for i in range(n):
            key = (i, j) if side == RIGHT else (j, i)
            for k, c in alg.table.get(key, ()):
                rows[i][k] = c
        ops.append(Matrix._raw(rows, f, n))
    return module_from_row_ops(alg, "A", side, alg.names, ops, "A")


def embed_standard(alg: Algebra, lam) -> Report:
    """Check that c_t -> c_st + A^{>lam} (s the first row index) is an injective module map."""
    report = Report()
    w = standard_module(alg, lam, RIGHT)
    ideal = alg.ideal_above(lam)
    q = regular_quotient_module(alg, ideal)
    s = alg.datum.rows[lam][0]
    F = basis_map(w.basis_labels, q.basis_labels,
                  [(t, alg.names[alg.pos[(lam, s, t)]]) for t in w.basis_labels], alg.field)
    report.add("embedding-injective", lam, rank(F) == w.dim)
    bad = equivariance_failures(w, q, F)
    report.add("embedding-equivariant", lam, not bad,
               f"fails on {alg.names[bad[0]]}" if bad else "")
    return report


def quotient_cellular(alg: Algebra, saturated) -> Algebra:
    """Quotient by the span of the cells in an upward-closed set of labels."""
    d = alg.datum
    S = set(saturated)
    unknown = S - set(d.poset)
    if unknown:
        raise KeyError(f"unknown cells {sorted(map(fmt_label, unknown))}")
    w = d.poset.is_upward_closed(S)
    if w is not None:
        raise NotSaturatedError(*w)
    keep = [l for l in d.poset if l not in S]
    poset = d.poset.restrict(keep)
    datum = CellDatum(poset, {l: d.rows[l] for l in keep}, {l: d.cols[l] for l in keep})
    ideal = [i for i, l in enumerate(alg.cell_of) if l in S]
    return quotient_by_cells(alg, ideal, datum, lambda lab: alg.pos[lab], alg.name + "/S" if S else alg.name)
