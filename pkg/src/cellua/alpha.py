"""Idempotent decompositions, the alpha split, and the Levi / parabolic /
quotient algebras built from them."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Mapping

from .algebra import Algebra, CellDatum, ClosureError, quotient_by_cells, subalgebra
from .field import Field
from .modules import RIGHT, CellModule, nonzero_simples, simple_dimension, simple_module, standard_module
from .poset import Poset
from .report import Report, fmt_label


class AssumptionError(ValueError):
    """The idempotent datum does not split the cells as required."""


@dataclass(frozen=True)
class AlphaDatum:
    """Everything needed on top of a cellular algebra to split its cells.

    ``lambda_tilde`` is an ambient poset containing the cell labels,
    ``lambda_set`` the labels of the idempotents, ``idempotents`` their
    coefficient vectors in the algebra's basis, and ``alpha`` an
    order-preserving map from ``lambda_tilde`` to the poset ``x_poset``.
    """

    lambda_tilde: Poset
    lambda_set: tuple
    idempotents: Mapping[Hashable, tuple]
    x_poset: Poset
    alpha: Mapping[Hashable, Hashable]

    def __post_init__(self):
        object.__setattr__(self, "lambda_set", tuple(self.lambda_set))
        object.__setattr__(self, "idempotents", {k: tuple(v) for k, v in self.idempotents.items()})
        object.__setattr__(self, "alpha", dict(self.alpha))

    def to_field(self, field: Field) -> "AlphaDatum":
        return AlphaDatum(self.lambda_tilde, self.lambda_set,
                          {k: tuple(c if field.contains(c) else field(c) for c in v)
                           for k, v in self.idempotents.items()},
                          self.x_poset, self.alpha)

    def with_alpha(self, alpha: Mapping, x_poset: Poset | None = None) -> "AlphaDatum":
        return AlphaDatum(self.lambda_tilde, self.lambda_set, self.idempotents,
                          x_poset or self.x_poset, alpha)

    def without(self, mu) -> "AlphaDatum":
        """Drop one idempotent from the family (a deliberately broken datum)."""
        return AlphaDatum(self.lambda_tilde, tuple(m for m in self.lambda_set if m != mu),
                          {k: v for k, v in self.idempotents.items() if k != mu},
                          self.x_poset, self.alpha)


def constant_alpha(ad: AlphaDatum, value: Hashable = "*") -> AlphaDatum:
    """The degenerate datum where alpha sends everything to one point."""
    return ad.with_alpha({k: value for k in ad.lambda_tilde}, Poset([value]))


# -- assumptions ---------------------------------------------------------------

def _cell_vec(alg: Algebra, lam, s, t) -> tuple:
    return alg.basis_vector(alg.pos[(lam, s, t)])


def right_fixers(alg: Algebra, ad: AlphaDatum, lam, t) -> list:
    """Labels mu with c_st e_mu = c_st for every row index s."""
    out = []
    for mu in ad.lambda_set:
        e = ad.idempotents[mu]
        if all(alg.mul_vec(_cell_vec(alg, lam, s, t), e) == _cell_vec(alg, lam, s, t)
               for s in alg.datum.rows[lam]):
            out.append(mu)
    return out


def left_fixers(alg: Algebra, ad: AlphaDatum, lam, s) -> list:
    """Labels mu with e_mu c_st = c_st for every column index t."""
    out = []
    for mu in ad.lambda_set:
        e = ad.idempotents[mu]
        if all(alg.mul_vec(e, _cell_vec(alg, lam, s, t)) == _cell_vec(alg, lam, s, t)
               for t in alg.datum.cols[lam]):
            out.append(mu)
    return out


def _listed(rep: Report, tag: str, items, fmt):
    if not items:
        rep.add(tag, "all", True)
        return
    for it in items[:20]:
        labels, detail = fmt(it)
        rep.add(tag, labels, False, detail)
    if len(items) > 20:
        rep.note(f"{tag}: {len(items) - 20} further violations not listed")


def verify_assumptions(alg: Algebra, ad: AlphaDatum) -> Report:
    """Check the idempotent datum and the alpha map against the cell structure.

    One PASS line per condition, or one FAIL line per witness.
    """
    rep = Report()
    d = alg.datum
    lt = ad.lambda_tilde
    f = alg.field
    n = alg.dim

    missing = [l for l in list(d.poset) + list(ad.lambda_set) if l not in lt]
    rep.add("A1-contains", "all", not missing,
            f"not in the ambient poset: {', '.join(map(fmt_label, missing))}" if missing else "")
    bad = [(a, b) for a, b in d.poset.pairs() if a in lt and b in lt and not lt.gt(a, b)]
    _listed(rep, "A1-extends", bad, lambda ab: ([ab[0], ab[1]], "cell order is not inherited by the ambient poset"))

    unknown = [mu for mu in ad.lambda_set if mu not in ad.idempotents or len(ad.idempotents[mu]) != n]
    if unknown:
        rep.add("A2-given", "all", False, f"no usable idempotent for {', '.join(map(fmt_label, unknown))}")
        return rep
    total = [f.zero] * n
    for mu in ad.lambda_set:
        for k, c in enumerate(ad.idempotents[mu]):
            total[k] = total[k] + c
    rep.add("A2-sum", "all", tuple(total) == alg.unit, "sum of the idempotents is not the unit")
    zero = tuple(alg.zero_vector())
    bad_nz = [mu for mu in ad.lambda_set if ad.idempotents[mu] == zero]
    rep.add("A2-nonzero", "all", not bad_nz, f"zero idempotent {fmt_label(bad_nz[0])}" if bad_nz else "")
    orth = []
    for mu in ad.lambda_set:
        for nu in ad.lambda_set:
            p = alg.mul_vec(ad.idempotents[mu], ad.idempotents[nu])
            if p != (ad.idempotents[mu] if mu == nu else zero):
                orth.append((mu, nu))
    _listed(rep, "A2-orthogonal", orth, lambda mn: ([mn[0], mn[1]], "e_mu e_nu differs from delta(mu,nu) e_mu"))

    supp = []
    for mu in ad.lambda_set:
        for k, c in enumerate(ad.idempotents[mu]):
            lam = alg.cell_of[k]
            if c and not (lam in lt and mu in lt and lt.ge(lam, mu)):
                supp.append((mu, alg.names[k]))
    _listed(rep, "A3-support", supp, lambda x: ([x[0], x[1]], f"term {x[1]} comes from a cell not above the label"))

    col, row, cons = [], [], []
    assign = {}
    for lam in d.cell_order():
        for t in d.cols[lam]:
            fx = right_fixers(alg, ad, lam, t)
            if len(fx) != 1:
                col.append((lam, t, fx))
                continue
            assign[(lam, t)] = fx[0]
            if t in d.rows[lam]:
                e = ad.idempotents[fx[0]]
                if any(alg.mul_vec(e, _cell_vec(alg, lam, t, u)) != _cell_vec(alg, lam, t, u)
                       for u in d.cols[lam]):
                    row.append((lam, t, fx))
        for s in d.rows[lam]:
            lf = left_fixers(alg, ad, lam, s)
            if len(lf) != 1 or assign.get((lam, s), lf[0]) != lf[0]:
                cons.append((lam, s, lf))
    _listed(rep, "A4-column", col, lambda x: ([x[0], x[1]], f"idempotents fixing the column: {list(x[2])}"))
    _listed(rep, "A4-row", row, lambda x: ([x[0], x[1]], f"{x[2][0]} fixes the column but not the row"))
    _listed(rep, "A4-consistent", cons, lambda x: ([x[0], x[1]], f"idempotents fixing the row: {list(x[2])}"))

    # each idempotent lives on the cells whose indices it fixes on both sides
    e_supp = []
    for mu in ad.lambda_set:
        for k, c in enumerate(ad.idempotents[mu]):
            if c:
                lam, s, t = alg.labels[k]
                if assign.get((lam, s)) != mu or assign.get((lam, t)) != mu:
                    e_supp.append((mu, alg.names[k]))
    _listed(rep, "idempotent-support", e_supp, lambda x: ([x[0], x[1]], "term with an index fixed by another idempotent"))

    undefined = [l for l in lt if l not in ad.alpha or ad.alpha[l] not in ad.x_poset]
    rep.add("alpha-total", "all", not undefined,
            f"alpha undefined or outside X at {', '.join(map(fmt_label, undefined))}" if undefined else "")
    if not undefined:
        xo = ad.x_poset
        wrong = [(a, b) for a, b in lt.pairs() if not xo.ge(ad.alpha[a], ad.alpha[b])]
        _listed(rep, "alpha-order", wrong, lambda ab: ([ab[0], ab[1]], "alpha does not preserve this relation"))
    return rep


# -- the split of each index set -------------------------------------------------

@dataclass(frozen=True)
class TableauPartition:
    """Which idempotent fixes each index, and the resulting plus/minus split."""

    t_sets: Mapping[Hashable, tuple]
    assign: Mapping[tuple, Hashable]
    alpha: Mapping[Hashable, Hashable]

    def T(self, lam, mu) -> tuple:
        return tuple(t for t in self.t_sets[lam] if self.assign[(lam, t)] == mu)

    def plus(self, lam) -> tuple:
        return tuple(t for t in self.t_sets[lam] if self.sign(lam, t) == 0)

    def minus(self, lam) -> tuple:
        return tuple(t for t in self.t_sets[lam] if self.sign(lam, t) == 1)

    def sign(self, lam, t) -> int:
        """0 for an index in the plus part, 1 for the minus part."""
        return 0 if self.alpha[self.assign[(lam, t)]] == self.alpha[lam] else 1


def tableau_partition(alg: Algebra, ad: AlphaDatum) -> TableauPartition:
    d = alg.datum
    if not d.is_symmetric:
        raise AssumptionError("the split needs a cellular algebra")
    assign = {}
    lt, xo = ad.lambda_tilde, ad.x_poset
    for lam in d.cell_order():
        for t in d.cols[lam]:
            fx = right_fixers(alg, ad, lam, t)
            if len(fx) != 1:
                what = "no idempotent" if not fx else f"several idempotents ({', '.join(map(fmt_label, fx))})"
                raise AssumptionError(f"{what} fix column {t} of cell {fmt_label(lam)}")
            mu = fx[0]
            if lam not in lt or mu not in lt or not lt.ge(lam, mu):
                raise AssumptionError(f"index {t} of {fmt_label(lam)} is fixed by {fmt_label(mu)}, "
                                      f"which is not below it")
            if not xo.ge(ad.alpha[lam], ad.alpha[mu]):
                raise AssumptionError(f"alpha({fmt_label(lam)}) is not above alpha({fmt_label(mu)})")
            assign[(lam, t)] = mu
    return TableauPartition(dict(d.cols), assign, dict(ad.alpha))


# -- the doubled poset -----------------------------------------------------------

@dataclass(frozen=True)
class OmegaData:
    poset: Poset                   # labels (lam, eps) with a nonempty index set
    index: Mapping[tuple, tuple]   # (lam, eps) -> plus part (eps 0) or minus part (eps 1)
    hat: tuple                     # the eps = 1 labels
    bar: tuple                     # the eps = 0 labels
    lambda_bar: tuple              # cells with a nonempty plus part


def omega(alg: Algebra, part: TableauPartition) -> OmegaData:
    """Labels (lam, eps) ordered by eps first, then by the cell order.

    Listed cell by cell with eps ascending.
    """
    d = alg.datum
    elems, index = [], {}
    for lam in d.poset:
        for eps, ts in ((0, part.plus(lam)), (1, part.minus(lam))):
            if ts:
                elems.append((lam, eps))
                index[(lam, eps)] = ts
    rel = [(a, b) for a in elems for b in elems
           if a[1] > b[1] or (a[1] == b[1] and d.poset.gt(a[0], b[0]))]
    P = Poset(elems, rel)
    hat = tuple(x for x in elems if x[1] == 1)
    bar = tuple(x for x in elems if x[1] == 0)
    return OmegaData(P, index, hat, bar, tuple(x[0] for x in bar))


# -- the three algebras ----------------------------------------------------------

def _from_parent(alg: Algebra):
    return lambda lab: alg.pos[(lab[0][0], lab[1], lab[2])]


def build_levi(alg: Algebra, om: OmegaData) -> Algebra:
    """Span of the c_st with s, t in the same part; cellular over the doubled poset."""
    datum = CellDatum.cellular(om.poset, om.index)
    try:
        return subalgebra(alg, datum, _from_parent(alg), "levi")
    except ClosureError as exc:
        raise AssumptionError(f"levi span is not a unital subalgebra: {exc}") from None


def parabolic_datum(alg: Algebra, om: OmegaData) -> CellDatum:
    rows, cols = {}, {}
    for lab in om.poset:
        lam, eps = lab
        rows[lab] = om.index[lab]
        cols[lab] = om.index[lab] if eps == 0 else alg.datum.cols[lam]
    return CellDatum(om.poset, rows, cols)


def build_parabolic(alg: Algebra, om: OmegaData, star: bool = False) -> Algebra:
    """Minus rows may pair with any column; the result is only standardly based.

    With ``star`` the transposed span is built instead.
    """
    datum = parabolic_datum(alg, om)
    if star:
        datum = datum.star()
    try:
        return subalgebra(alg, datum, _from_parent(alg), "parabolic-star" if star else "parabolic")
    except ClosureError as exc:
        raise AssumptionError(f"parabolic span is not a unital subalgebra: {exc}") from None


def _bar_datum(parent: Algebra, om: OmegaData) -> CellDatum:
    lam_poset = parent.datum.poset.restrict(om.lambda_bar)
    return CellDatum.cellular(lam_poset, {lam: om.index[(lam, 0)] for lam in om.lambda_bar})


def _quotient_eps1(sub: Algebra, om: OmegaData, name: str) -> Algebra:
    ideal = [i for i, lab in enumerate(sub.cell_of) if lab[1] == 1]
    return quotient_by_cells(sub, ideal, _bar_datum(sub.parent, om),
                             lambda lab: sub.pos[((lab[0], 0), lab[1], lab[2])], name)


def build_quotient(levi: Algebra, om: OmegaData) -> Algebra:
    """The levi algebra modulo the span of its eps = 1 cells, relabelled by cells."""
    w = om.poset.is_upward_closed(om.hat)
    if w is not None:
        raise AssumptionError(f"eps = 1 labels are not upward closed: {fmt_label(w[0])} lies above {fmt_label(w[1])}")
    return _quotient_eps1(levi, om, "quotient")


def quotient_of_parabolic(par: Algebra, om: OmegaData) -> Algebra:
    """The same quotient, taken from the parabolic algebra instead."""
    return _quotient_eps1(par, om, "quotient")


ALGEBRA_NAMES = ("A", "levi", "parabolic", "parabolic-star", "quotient")


class AlphaConstruction:
    """The algebra, its alpha datum, and everything derived from them, built lazily.

    Radicals, decomposition matrices and modules are cached per algebra so
    the relation checks can share them.
    """

    def __init__(self, alg: Algebra, ad: AlphaDatum, threads: int | None = None):
        self.A = alg
        self.ad = ad
        self.threads = threads
        self._cache: dict = {}

    @cached_property
    def assumptions(self) -> Report:
        return verify_assumptions(self.A, self.ad)

    @cached_property
    def partition(self) -> TableauPartition:
        return tableau_partition(self.A, self.ad)

    @cached_property
    def omega(self) -> OmegaData:
        return omega(self.A, self.partition)

    @cached_property
    def levi(self) -> Algebra:
        return build_levi(self.A, self.omega)

    @cached_property
    def parabolic(self) -> Algebra:
        return build_parabolic(self.A, self.omega)

    @cached_property
    def parabolic_star(self) -> Algebra:
        return build_parabolic(self.A, self.omega, star=True)

    @cached_property
    def quotient(self) -> Algebra:
        return build_quotient(self.levi, self.omega)

    def algebra(self, name: str) -> Algebra:
        if name not in ALGEBRA_NAMES:
            raise KeyError(f"unknown algebra {name!r}; choose from {', '.join(ALGEBRA_NAMES)}")
        return self.A if name == "A" else getattr(self, name.replace("-", "_"))

    def alpha_of(self, lab):
        """alpha of a cell label, or of the cell part of a doubled label."""
        return self.ad.alpha[lab[0] if isinstance(lab, tuple) else lab]

    def dimensions(self) -> dict:
        return {n: self.algebra(n).dim for n in ALGEBRA_NAMES}

    # -- cached representation theory --------------------------------

    def _cached(self, key, build):
        if key not in self._cache:
            self._cache[key] = build()
        return self._cache[key]

    def radical(self, name: str):
        from .repth import jacobson_radical
        return self._cached(("J", name), lambda: jacobson_radical(self.algebra(name)))

    def decomposition(self, name: str, side: str = RIGHT):
        from .repth import decomposition_matrix
        return self._cached(("D", name, side), lambda: decomposition_matrix(
            self.algebra(name), side, self.radical(name), self.threads))

    def standard(self, name: str, lab, side: str = RIGHT) -> CellModule:
        return self._cached(("W", name, lab, side), lambda: standard_module(self.algebra(name), lab, side))

    def simple(self, name: str, lab, side: str = RIGHT) -> CellModule:
        return self._cached(("L", name, lab, side), lambda: simple_module(
            self.algebra(name), lab, side, self.standard(name, lab, side)))

    def nonzero(self, name: str) -> tuple:
        """Labels whose simple head is nonzero."""
        return self._cached(("N", name), lambda: tuple(nonzero_simples(self.algebra(name))))

    def simple_dim(self, name: str, lab) -> int:
        return simple_dimension(self.algebra(name), lab)


def standard_modules_alpha(con: AlphaConstruction, side: str = RIGHT) -> dict:
    """Standard modules of the levi, parabolic and quotient algebras, keyed by (algebra, label)."""
    out = {}
    for name in ("levi", "parabolic", "quotient"):
        for lab in con.algebra(name).datum.poset:
            out[(name, lab)] = con.standard(name, lab, side)
    return out
