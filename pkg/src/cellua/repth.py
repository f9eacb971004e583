"""Jacobson radical, radical layers, Hom spaces and decomposition numbers."""

from __future__ import annotations

import csv
import io
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Hashable, Mapping, Sequence

from .algebra import Algebra
from .linalg import Matrix, nullspace, rref_rows, row_basis, is_subspace, vec_matmul
from .modules import RIGHT, CellModule, SideMismatchError, simple_module, standard_module, \
    nonzero_simples, subquotient
from .report import fmt_label


class UnsupportedCharacteristicError(ValueError):
    pass


class NonSplitError(ValueError):
    pass


class RadicalError(RuntimeError):
    """The trace-form kernel failed its own consistency checks."""


def thread_count() -> int:
    """Worker cap from CELLUA_THREADS (0 or unset means one per CPU)."""
    raw = os.environ.get("CELLUA_THREADS", "0").strip() or "0"
    try:
        n = int(raw)
    except ValueError:
        n = 0
    if n <= 0:
        n = os.cpu_count() or 1
    return n


def _pmap(fn, items, threads: int | None):
    threads = thread_count() if threads is None else threads
    if threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=min(threads, len(items))) as ex:
        return list(ex.map(fn, items))


# -- radical ---------------------------------------------------------------

def check_characteristic(alg: Algebra):
    p = alg.field.characteristic
    if p != 0 and p <= alg.dim:
        raise UnsupportedCharacteristicError(
            f"the radical needs characteristic 0 or p > dim A; here p = {p} and dim A = {alg.dim}")


def trace_form(alg: Algebra) -> Matrix:
    """T[i][j] = trace of left multiplication by c_i c_j."""
    f = alg.field
    n = alg.dim
    tr = []
    for k in range(n):
        s = f.zero
        for m in range(n):
            for kk, c in alg.table.get((k, m), ()):
                if kk == m:
                    s = s + c
        tr.append(s)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            s = f.zero
            for k, c in alg.table.get((i, j), ()):
                if tr[k]:
                    s = s + c * tr[k]
            row.append(s)
        rows.append(row)
    return Matrix._raw(rows, f, n)


def jacobson_radical(alg: Algebra, verify: bool = True) -> tuple:
    """Echelon basis of the radical, as the kernel of the trace form."""
    check_characteristic(alg)
    J = row_basis(nullspace(trace_form(alg)), alg.dim, alg.field)
    if verify:
        _verify_radical(alg, J)
    return J


def _verify_radical(alg: Algebra, J):
    n, f = alg.dim, alg.field
    for v in J:
        for i in range(n):
            for w in (alg.basis_times(i, v), alg.times_basis(v, i)):
                if any(w) and not is_subspace([w], J, n, f):
                    raise RadicalError("trace-form kernel is not a two-sided ideal")
    power = J
    for _ in range(n + 1):
        if not power:
            return
        power = row_basis([alg.mul_vec(a, b) for a in power for b in J], n, f)
    raise RadicalError("trace-form kernel is not nilpotent")


def radical_power_dims(alg: Algebra, J) -> list[int]:
    dims = []
    power = J
    while power:
        dims.append(len(power))
        power = row_basis([alg.mul_vec(a, b) for a in power for b in J], alg.dim, alg.field)
    return dims


# -- filtrations and Hom ------------------------------------------------------

def radical_series(m: CellModule, J) -> list[tuple]:
    """Subspaces M, MJ, MJ^2, ... down to and including 0."""
    f = m.field
    n = m.dim
    ops = [m.row_op_of(j) for j in J]
    cur = row_basis([tuple(f.one if i == k else f.zero for k in range(n)) for i in range(n)], n, f)
    spaces = [cur]
    while cur:
        nxt = row_basis([vec_matmul(v, R) for v in cur for R in ops], n, f)
        if len(nxt) >= len(cur):
            raise RadicalError("radical does not act nilpotently on the module")
        cur = nxt
        spaces.append(cur)
    return spaces


def radical_filtration(m: CellModule, J) -> list[CellModule]:
    """The semisimple layers MJ^k / MJ^(k+1); empty for the zero module."""
    spaces = radical_series(m, J)
    return [subquotient(m, spaces[k + 1], spaces[k]) for k in range(len(spaces) - 1)]


def hom_dimension(m: CellModule, n: CellModule) -> int:
    """dim of the space of module maps m -> n."""
    if m.side != n.side:
        raise SideMismatchError(f"Hom between a {m.side} and a {n.side} module")
    if m.algebra is not n.algebra:
        raise ValueError("Hom between modules over different algebras")
    dm, dn = m.dim, n.dim
    if dm == 0 or dn == 0:
        return 0
    f = m.field
    nv = dm * dn
    eqs: list[list] = []
    for i in range(m.algebra.dim):
        A = m.row_op(i).rows
        B = n.row_op(i).rows
        for p in range(dm):
            for q in range(dn):
                row = [f.zero] * nv
                for r in range(dm):
                    if A[p][r]:
                        row[r * dn + q] = row[r * dn + q] + A[p][r]
                for c in range(dn):
                    if B[c][q]:
                        row[p * dn + c] = row[p * dn + c] - B[c][q]
                if any(row):
                    eqs.append(row)
        # keep the system small as it grows
        if len(eqs) > 2 * nv:
            piv = rref_rows(eqs, nv, f)
            eqs = eqs[:len(piv)]
    return nv - len(rref_rows(eqs, nv, f))


def composition_multiplicities(m: CellModule, simples: Mapping[Hashable, CellModule], J) -> dict:
    """[m : L] for each simple L, read off the radical layers via Hom."""
    for lab, L in simples.items():
        if L.dim and hom_dimension(L, L) != 1:
            raise NonSplitError(f"End({L.name()}) is not one-dimensional")
    out = {}
    for layer in radical_filtration(m, J):
        for lab, L in simples.items():
            if L.dim == 0:
                continue
            h = hom_dimension(layer, L)
            if h:
                out[lab] = out.get(lab, 0) + h
    total = sum(out[l] * simples[l].dim for l in out)
    if total != m.dim:
        raise NonSplitError(f"composition factors of {m.name()} account for {total} of {m.dim} dimensions")
    return out


# -- decomposition matrices ----------------------------------------------------

@dataclass(frozen=True)
class DecompositionMatrix:
    rows: tuple
    cols: tuple
    entries: tuple   # tuple of tuples of ints

    def get(self, r, c) -> int:
        """Entry with the zero convention for labels that are absent."""
        if r not in self.rows or c not in self.cols:
            return 0
        return self.entries[self.rows.index(r)][self.cols.index(c)]

    def __getitem__(self, rc):
        r, c = rc
        if r not in self.rows or c not in self.cols:
            raise KeyError(rc)
        return self.get(r, c)

    def row(self, r) -> dict:
        return {c: self.get(r, c) for c in self.cols}

    def as_lists(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([""] + [fmt_label(c) for c in self.cols])
        for r, row in zip(self.rows, self.entries):
            w.writerow([fmt_label(r)] + list(row))
        return buf.getvalue()

    def to_text(self) -> str:
        rl = [fmt_label(r) for r in self.rows]
        cl = [fmt_label(c) for c in self.cols]
        w0 = max([len(x) for x in rl] + [0])
        widths = [max(len(c), 1) for c in cl]
        lines = [" " * w0 + " | " + " ".join(c.rjust(w) for c, w in zip(cl, widths))]
        lines.append("-" * len(lines[0]))
        for r, row in zip(rl, self.entries):
            lines.append(r.ljust(w0) + " | " + " ".join(str(x).rjust(w) for x, w in zip(row, widths)))
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {"rows": [fmt_label(r) for r in self.rows], "cols": [fmt_label(c) for c in self.cols],
                "entries": self.as_lists()}

    def is_unitriangular(self, poset) -> bool:
        for r in self.rows:
            for c in self.cols:
                x = self.get(r, c)
                if r == c and x != 1:
                    return False
                if x and not poset.ge(r, c):
                    return False
        return True


def decomposition_matrix(alg: Algebra, side: str = RIGHT, J=None, threads: int | None = None) -> DecompositionMatrix:
    """Rows: every cell label; columns: labels whose simple module is nonzero."""
    if J is None:
        J = jacobson_radical(alg)
    rows = tuple(alg.datum.poset.elements)
    cols = tuple(nonzero_simples(alg))
    simples = {c: simple_module(alg, c, side) for c in cols}

    def one_row(lam):
        mult = composition_multiplicities(standard_module(alg, lam, side), simples, J)
        return tuple(mult.get(c, 0) for c in cols)

    entries = tuple(_pmap(one_row, list(rows), threads))
    return DecompositionMatrix(rows, cols, entries)


def linkage_partition(d: DecompositionMatrix) -> list[tuple]:
    """Classes of row labels joined whenever two rows share a nonzero column."""
    parent = {r: r for r in d.rows}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for j in range(len(d.cols)):
        hit = [d.rows[i] for i in range(len(d.rows)) if d.entries[i][j]]
        for a in hit[1:]:
            ra, rb = find(a), find(hit[0])
            if ra != rb:
                parent[ra] = rb
    classes: dict = {}
    for r in d.rows:
        classes.setdefault(find(r), []).append(r)
    return [tuple(v) for v in classes.values()]


def cartan_via_formula(left: DecompositionMatrix, right: DecompositionMatrix) -> DecompositionMatrix:
    """C(x, y) = sum over rows of left(row, x) * right(row, y)."""
    if left.rows != right.rows or left.cols != right.cols:
        raise ValueError("left and right decomposition matrices have different labels")
    cols = left.cols
    ent = []
    for x in range(len(cols)):
        line = []
        for y in range(len(cols)):
            line.append(sum(left.entries[r][x] * right.entries[r][y] for r in range(len(left.rows))))
        ent.append(tuple(line))
    return DecompositionMatrix(cols, cols, tuple(ent))


def cartan_blocks(c: DecompositionMatrix) -> list[tuple]:
    """Connected components of the graph with an edge x - y when C(x,y) or C(y,x) is nonzero."""
    parent = {x: x for x in c.cols}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for x in c.rows:
        for y in c.cols:
            if c.get(x, y) or c.get(y, x):
                a, b = find(x), find(y)
                if a != b:
                    parent[a] = b
    classes: dict = {}
    for x in c.cols:
        classes.setdefault(find(x), []).append(x)
    return [tuple(v) for v in classes.values()]
