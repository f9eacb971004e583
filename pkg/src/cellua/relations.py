"""Machine checks relating A to its levi, parabolic and quotient algebras.

Every check adds one line to a :class:`Report`.  Module isomorphisms are
explicit basis-labelled maps tested against every algebra basis element,
never inferred from dimensions.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra import verify_cellular, verify_standardly_based
from .alpha import AlphaConstruction, AssumptionError, quotient_of_parabolic
from .linalg import intersect_spaces, rank, row_basis, sum_spaces
from .modules import LEFT, RIGHT, CellModule, basis_map, direct_sum, equivariance_failures, image_space, \
    inflate, pairing, preimage_space, radical_vectors, regular_module, restrict
from .report import CheckResult, Report, fmt_label
from .repth import _pmap, cartan_blocks, cartan_via_formula, composition_multiplicities, linkage_partition


def _prefixed(rep: Report, other: Report, prefix: str):
    for r in other:
        rep.results.append(CheckResult(f"{prefix}-{r.tag}", r.labels, r.passed, r.detail))
    rep.notes.extend(other.notes)


def _units(n, f):
    return [tuple(f.one if i == j else f.zero for j in range(n)) for i in range(n)]


def _pad(v, before, after, f):
    return tuple([f.zero] * before) + tuple(v) + tuple([f.zero] * after)


def _label_map(src: CellModule, tgt: CellModule):
    """Send each basis label of src to the same label of tgt (or to 0)."""
    common = [x for x in src.basis_labels if x in set(tgt.basis_labels)]
    return basis_map(src.basis_labels, tgt.basis_labels, [(x, x) for x in common], src.field)


def _equivariant(rep, tag, labels, src, tgt, F) -> bool:
    bad = equivariance_failures(src, tgt, F)
    return rep.add(tag, labels, not bad, f"fails on {src.algebra.names[bad[0]]}" if bad else "")


def _iso(rep, tag, labels, src, tgt, F) -> bool:
    if not (src.dim == tgt.dim == rank(F)):
        return rep.add(tag, labels, False, f"map of rank {rank(F)} between dimensions {src.dim} and {tgt.dim}")
    return _equivariant(rep, tag, labels, src, tgt, F)


def _rad(alg, lab, side=RIGHT):
    d = alg.datum
    n = len(d.cols[lab] if side == RIGHT else d.rows[lab])
    return row_basis(radical_vectors(alg, lab, side), n, alg.field)


# -- the constructions themselves -----------------------------------------------

def _form_entry(cache, alg, lab, s, t):
    """K[s][t] of the cell form, s a column index and t a row index."""
    key = (id(alg), lab)
    if key not in cache:
        cache[key] = pairing(alg, lab)
    d = alg.datum
    return cache[key].rows[d.cols[lab].index(s)][d.rows[lab].index(t)]


def check_forms(con: AlphaConstruction) -> Report:
    """Cell forms of A against those of the three derived algebras, entry by entry."""
    rep = Report()
    A, part, om = con.A, con.partition, con.omega
    L, P, Q = con.levi, con.parabolic, con.quotient
    f = A.field
    cache: dict = {}
    for lam in A.datum.cell_order():
        plus, minus = part.plus(lam), part.minus(lam)

        def g(s, t):
            return _form_entry(cache, A, lam, s, t)

        bad = []
        for s in plus:
            for t in plus:
                vals = (g(s, t), _form_entry(cache, P, (lam, 0), s, t),
                        _form_entry(cache, L, (lam, 0), s, t), _form_entry(cache, Q, lam, s, t))
                if len(set(vals)) != 1:
                    bad.append((s, t))
        rep.add("form-plus-agrees", [lam], not bad, f"differs at {bad[0]}" if bad else "")
        bad = []
        for s in minus:
            for t in minus:
                vals = (g(s, t), _form_entry(cache, P, (lam, 1), s, t), _form_entry(cache, L, (lam, 1), s, t))
                if len(set(vals)) != 1:
                    bad.append((s, t))
        rep.add("form-minus-agrees", [lam], not bad, f"differs at {bad[0]}" if bad else "")
        bad = [(s, t) for s in plus for t in minus
               if g(s, t) or g(t, s) or _form_entry(cache, P, (lam, 1), s, t)]
        rep.add("form-block-diagonal", [lam], not bad, f"nonzero mixed entry at {bad[0]}" if bad else "")
        if (lam, 1) in om.index:
            rp = rank(pairing(P, (lam, 1)))
            rl = rank(pairing(L, (lam, 1)))
            rep.add("minus-form-rank", [lam], rp == rl, f"parabolic rank {rp}, levi rank {rl}")
    return rep


def _product_support(con: AlphaConstruction) -> Report:
    """Products of basis elements of A vanish or land where the idempotents allow."""
    rep = Report()
    A, part = con.A, con.partition
    ge = A.datum.poset.ge
    assign = part.assign
    zero_bad, supp_bad = [], []
    for i, (l1, s1, t1) in enumerate(A.labels):
        mu1, nu1 = assign[(l1, s1)], assign[(l1, t1)]
        for j, (l2, s2, t2) in enumerate(A.labels):
            mu2, nu2 = assign[(l2, s2)], assign[(l2, t2)]
            terms = [(k, c) for k, c in A.table.get((i, j), ()) if c]
            if nu1 != mu2:
                if terms:
                    zero_bad.append((i, j))
                continue
            for k, _ in terms:
                lam, s, t = A.labels[k]
                if not (ge(lam, l1) and ge(lam, l2) and assign[(lam, s)] == mu1 and assign[(lam, t)] == nu2):
                    supp_bad.append((i, j, k))
                    break
    name = A.names
    rep.add("product-vanishing", "all", not zero_bad,
            f"{name[zero_bad[0][0]]} * {name[zero_bad[0][1]]} is nonzero" if zero_bad else "")
    rep.add("product-support", "all", not supp_bad,
            f"{name[supp_bad[0][0]]} * {name[supp_bad[0][1]]} has term {name[supp_bad[0][2]]}" if supp_bad else "")
    return rep


def _case_support(sub, weak_second: bool) -> list:
    """Products in the levi or parabolic basis whose terms break the case rules."""
    gt = sub.parent.datum.poset.gt
    ge = sub.parent.datum.poset.ge
    bad = []
    for i, ((l1, e1), _, _) in enumerate(sub.labels):
        for j, ((l2, e2), _, _) in enumerate(sub.labels):
            for k, c in sub.table.get((i, j), ()):
                if not c:
                    continue
                (lam, eps), _, _ = sub.labels[k]
                if e1 == 0:
                    ok1 = (lam, eps) == (l1, 0) or gt(lam, l1)
                else:
                    ok1 = eps == 1 and ge(lam, l1)
                if e2 == 0:
                    ok2 = ge(lam, l2) if weak_second else ((lam, eps) == (l2, 0) or gt(lam, l2))
                else:
                    ok2 = eps == 1 and ge(lam, l2)
                if not (ok1 and ok2):
                    bad.append((i, j, k))
    return bad


def check_constructions(con: AlphaConstruction) -> Report:
    rep = Report()
    A, om = con.A, con.omega
    f, n = A.field, A.dim
    L, P, S, Q = con.levi, con.parabolic, con.parabolic_star, con.quotient
    inside = set(L.parent_positions)
    rep.add("levi-contains-unit", "-", all(not c or k in inside for k, c in enumerate(A.unit)))
    w = om.poset.is_upward_closed(om.hat)
    rep.add("minus-labels-saturated", "-", w is None,
            f"{fmt_label(w[0])} lies above {fmt_label(w[1])}" if w else "")
    _prefixed(rep, verify_cellular(L), "levi")
    _prefixed(rep, verify_cellular(Q), "quotient")
    _prefixed(rep, verify_standardly_based(P), "parabolic")
    _prefixed(rep, verify_standardly_based(S), "parabolic-star")

    def vecs(alg):
        return [A.basis_vector(p) for p in alg.parent_positions]

    meet = intersect_spaces(vecs(P), vecs(S), n, f)
    rep.add("parabolic-meet-star-is-levi", "-", meet == row_basis(vecs(L), n, f),
            f"intersection has dimension {len(meet)}, levi {L.dim}")
    for first, second, tag in ((P, S, "parabolic-times-star-spans"), (S, P, "star-times-parabolic-spans")):
        span = row_basis([A.mul_vec(x, y) for x in vecs(first) for y in vecs(second)], n, f)
        rep.add(tag, "-", len(span) == n, f"products span dimension {len(span)} of {n}")

    hat_p = {P.parent_positions[i] for i, lab in enumerate(P.cell_of) if lab[1] == 1}
    hat_l = {L.parent_positions[i] for i, lab in enumerate(L.cell_of) if lab[1] == 1}
    rep.add("parabolic-ideal-meets-levi", "-", hat_p & inside == hat_l)
    Q2 = quotient_of_parabolic(P, om)
    rep.add("quotient-routes-agree", "-", Q2.same_structure(Q),
            "levi and parabolic quotients differ")

    rep.extend(_product_support(con))
    for sub, weak, tag in ((L, False, "levi-product-cases"), (P, True, "parabolic-product-cases")):
        bad = _case_support(sub, weak)
        nm = sub.names
        rep.add(tag, "all", not bad, f"{nm[bad[0][0]]} * {nm[bad[0][1]]} has term {nm[bad[0][2]]}" if bad else "")
    rep.extend(check_forms(con))
    return rep


# -- module isomorphisms ----------------------------------------------------------

def _module_checks(con: AlphaConstruction, lam) -> Report:
    rep = Report()
    A, L, P, Q, om = con.A, con.levi, con.parabolic, con.quotient, con.omega
    f = A.field
    present = [(lam, e) for e in (0, 1) if (lam, e) in om.index]
    has0 = (lam, 0) in om.index
    has1 = (lam, 1) in om.index
    pos_lp = [P.pos[lab] for lab in L.labels]

    W = con.standard("A", lam)
    rad_w = _rad(A, lam)

    # W restricted to the levi splits along the plus/minus parts
    parts = [con.standard("levi", lab) for lab in present]
    Zs = direct_sum(parts, lam, "Z")
    WL = restrict(W, L, L.parent_positions)
    F = _label_map(Zs, WL)
    _iso(rep, "levi-restriction-iso", [lam], Zs, WL, F)
    rad_z, full0, off = [], [], 0
    for lab, Z in zip(present, parts):
        after = Zs.dim - off - Z.dim
        rad_z += [_pad(v, off, after, f) for v in _rad(L, lab)]
        if lab[1] == 0:
            full0 = [_pad(v, off, after, f) for v in _units(Z.dim, f)]
        off += Z.dim
    rep.add("levi-restriction-radical", [lam], image_space(F, rad_z) == rad_w)

    if has0:
        Z0 = con.standard("levi", (lam, 0))
        Zb = inflate(con.standard("quotient", lam), L, Q.parent_positions)
        F = _label_map(Z0, Zb)
        _iso(rep, "levi-quotient-iso", [lam], Z0, Zb, F)
        rep.add("levi-quotient-radical", [lam], image_space(F, _rad(L, (lam, 0))) == _rad(Q, lam))

        # plus part: parabolic and levi agree
        Zt0 = con.standard("parabolic", (lam, 0))
        R = restrict(Zt0, L, pos_lp)
        _iso(rep, "parabolic-levi-plus-iso", [(lam, 0)], Z0, R, _label_map(Z0, R))
        rep.add("parabolic-levi-plus-radical", [(lam, 0)], _rad(L, (lam, 0)) == _rad(P, (lam, 0)))
    if has1:
        Zt1 = con.standard("parabolic", (lam, 1))
        R1 = restrict(Zt1, L, pos_lp)
        F = _label_map(Zs, R1)
        _iso(rep, "parabolic-levi-minus-iso", [(lam, 1)], Zs, R1, F)
        off1 = Zs.dim - con.standard("levi", (lam, 1)).dim
        rad1 = [_pad(v, off1, 0, f) for v in _rad(L, (lam, 1))]
        rep.add("parabolic-levi-minus-radical", [(lam, 1)],
                image_space(F, full0 + rad1) == _rad(P, (lam, 1)))

    # left modules over the levi and the parabolic
    for lab in present:
        Zl = con.standard("levi", lab, LEFT)
        Ztl = restrict(con.standard("parabolic", lab, LEFT), L, pos_lp)
        _iso(rep, "parabolic-levi-left-iso", [lab], Zl, Ztl, _label_map(Zl, Ztl))
        rep.add("parabolic-levi-left-radical", [lab], _rad(L, lab, LEFT) == _rad(P, lab, LEFT))

    # parabolic standard modules inside W
    WP = restrict(W, P, P.parent_positions)
    img0 = ()
    if has0:
        Zt0 = con.standard("parabolic", (lam, 0))
        F0 = _label_map(Zt0, WP)
        rep.add("parabolic-embed-injective", [lam], rank(F0) == Zt0.dim)
        _equivariant(rep, "parabolic-embed-equivariant", [lam], Zt0, WP, F0)
        rep.add("parabolic-embed-radical", [lam], preimage_space(F0, rad_w) == _rad(P, (lam, 0)))
        img0 = image_space(F0, _units(Zt0.dim, f))
    if has1:
        Zt1 = con.standard("parabolic", (lam, 1))
        G = _label_map(Zt1, WP)
        _iso(rep, "parabolic-cover-iso", [lam], Zt1, WP, G)
        rep.add("parabolic-cover-radical", [lam],
                image_space(G, _rad(P, (lam, 1))) == sum_spaces(img0, rad_w, W.dim, f))
    else:
        rep.add("parabolic-embed-spans", [lam], len(sum_spaces(img0, rad_w, W.dim, f)) == W.dim)

    Wl = con.standard("A", lam, LEFT)
    WlP = restrict(Wl, P, P.parent_positions)
    rad_wl = _rad(A, lam, LEFT)
    img1 = ()
    if has1:
        Zl1 = con.standard("parabolic", (lam, 1), LEFT)
        Fs = _label_map(Zl1, WlP)
        rep.add("parabolic-left-embed-injective", [lam], rank(Fs) == Zl1.dim)
        _equivariant(rep, "parabolic-left-embed-equivariant", [lam], Zl1, WlP, Fs)
        rep.add("parabolic-left-embed-radical", [lam],
                preimage_space(Fs, rad_wl) == _rad(P, (lam, 1), LEFT))
        img1 = image_space(Fs, _units(Zl1.dim, f))
    if has0:
        Zl0 = con.standard("parabolic", (lam, 0), LEFT)
        Gs = _label_map(WlP, Zl0)
        _equivariant(rep, "parabolic-left-projection-equivariant", [lam], WlP, Zl0, Gs)
        rep.add("parabolic-left-projection-surjective", [lam], rank(Gs) == Zl0.dim)
        rep.add("parabolic-left-projection-radical", [lam],
                preimage_space(Gs, _rad(P, (lam, 0), LEFT)) == sum_spaces(img1, rad_wl, Wl.dim, f))
    else:
        rep.add("parabolic-left-embed-spans", [lam], len(sum_spaces(img1, rad_wl, Wl.dim, f)) == Wl.dim)
    return rep


def check_module_relations(con: AlphaConstruction) -> Report:
    """Basis-labelled module maps between A, levi, parabolic and quotient, per cell."""
    for name in ("levi", "parabolic", "quotient"):
        con.algebra(name)
    cells = list(con.A.datum.cell_order())
    rep = Report()
    for part in _pmap(lambda lam: _module_checks(con, lam), cells, con.threads):
        rep.extend(part)
    return rep


# -- decomposition numbers --------------------------------------------------------

def _same(rep, tag, labels, values):
    vals = [v for _, v in values]
    return rep.add(tag, labels, len(set(vals)) == 1,
                   ", ".join(f"{k}={v}" for k, v in values))


def check_decomposition_relations(con: AlphaConstruction) -> Report:
    """Entrywise identities between the decomposition matrices.

    Absent labels count as zero.
    """
    rep = Report()
    A, om = con.A, con.omega
    al = con.alpha_of
    dA = con.decomposition("A")
    dL = con.decomposition("levi")
    dP = con.decomposition("parabolic")
    dQ = con.decomposition("quotient")
    dAl = con.decomposition("A", LEFT)
    dLl = con.decomposition("levi", LEFT)
    dPl = con.decomposition("parabolic", LEFT)
    cells = list(A.datum.poset)
    bar = list(om.lambda_bar)

    for name, r, l in (("A", dA, dAl), ("levi", dL, dLl), ("quotient", dQ, con.decomposition("quotient", LEFT))):
        rep.add(f"{name}-left-equals-right", "-", r == l)
    rep.add("parabolic-nonzero-heads-match-levi", "-", dP.cols == dL.cols,
            f"parabolic {[fmt_label(c) for c in dP.cols]}, levi {[fmt_label(c) for c in dL.cols]}")
    firsts = sorted({c[0] for c in dL.cols}, key=lambda x: cells.index(x))
    rep.add("nonzero-heads-cover", "-", firsts == list(dA.cols),
            f"levi heads over {[fmt_label(c) for c in firsts]}")

    for lam in bar:
        for mu in bar:
            _same(rep, "levi-quotient-decomp-equal", [lam, mu],
                  [("levi", dL.get((lam, 0), (mu, 0))), ("quotient", dQ.get(lam, mu))])
    for lam in cells:
        for mu in cells:
            rep.add("levi-plus-minus-vanish", [lam, mu], dL.get((lam, 0), (mu, 1)) == 0)
            if al(lam) == al(mu):
                rep.add("levi-minus-plus-vanish", [lam, mu], dL.get((lam, 1), (mu, 0)) == 0)
            else:
                rep.add("levi-plus-plus-vanish", [lam, mu], dL.get((lam, 0), (mu, 0)) == 0)
                if lam in bar and mu in bar:
                    rep.add("quotient-vanish", [lam, mu], dQ.get(lam, mu) == 0)

    l0 = set(dL.cols)
    for lam in cells:
        for mu in dA.cols:
            if (mu, 0) in l0 and al(lam) == al(mu):
                _same(rep, "decomp-plus-same-alpha", [lam, mu],
                      [("A", dA.get(lam, mu)), ("levi", dL.get((lam, 0), (mu, 0))),
                       ("parabolic", dP.get((lam, 0), (mu, 0))), ("quotient", dQ.get(lam, mu))])
                _same(rep, "decomp-left-plus-same-alpha", [lam, mu],
                      [("parabolic", dP.get((lam, 0), (mu, 0))), ("levi", dL.get((lam, 0), (mu, 0))),
                       ("levi-left", dLl.get((lam, 0), (mu, 0))), ("parabolic-left", dPl.get((lam, 0), (mu, 0)))])
            elif (mu, 0) in l0:
                _same(rep, "decomp-plus-other-alpha", [lam, mu],
                      [("A", dA.get(lam, mu)), ("levi", dL.get((lam, 1), (mu, 0))),
                       ("parabolic", dP.get((lam, 1), (mu, 0)))])
                _same(rep, "decomp-left-plus-other-alpha", [lam, mu],
                      [("parabolic", dP.get((lam, 1), (mu, 0))), ("levi", dL.get((lam, 1), (mu, 0))),
                       ("levi-left", dLl.get((lam, 1), (mu, 0))), ("parabolic-left", dPl.get((lam, 1), (mu, 0)))])
            if (mu, 1) in l0:
                _same(rep, "decomp-minus", [lam, mu],
                      [("A", dA.get(lam, mu)), ("levi", dL.get((lam, 1), (mu, 1))),
                       ("parabolic", dP.get((lam, 1), (mu, 1)))])
                _same(rep, "decomp-left-minus", [lam, mu],
                      [("parabolic", dP.get((lam, 1), (mu, 1))), ("levi", dL.get((lam, 1), (mu, 1))),
                       ("levi-left", dLl.get((lam, 1), (mu, 1))), ("parabolic-left", dPl.get((lam, 1), (mu, 1)))])
    return rep


# -- condition (C) ------------------------------------------------------------------

@dataclass
class ConditionC:
    holds: bool
    witness: str = ""
    report: Report = dc_field(default_factory=Report)


def check_condition_C(con: AlphaConstruction) -> ConditionC:
    """Heads of A indexed by idempotent labels, each idempotent nonzero modulo higher cells.

    When this holds, every plus part of a head cell has a nonzero simple
    over the levi algebra; that consequence is checked in ``report``.
    """
    A, ad = con.A, con.ad
    heads = list(con.decomposition("A").cols)
    missing = [mu for mu in heads if mu not in ad.lambda_set]
    out = ConditionC(True)
    if missing:
        out.holds = False
        out.witness = f"heads not among the idempotent labels: {', '.join(map(fmt_label, missing))}"
    else:
        gt = A.datum.poset.gt
        for mu in heads:
            e = ad.idempotents[mu]
            if not any(c and not gt(A.cell_of[k], mu) for k, c in enumerate(e)):
                out.holds = False
                out.witness = f"e_{fmt_label(mu)} lies in the span of cells above {fmt_label(mu)}"
                break
    if out.holds:
        for mu in heads:
            lab = (mu, 0)
            ok = lab in con.omega.index and con.simple_dim("levi", lab) > 0
            out.report.add("condition-C-nonzero-head", [lab], ok)
    return out


# -- blocks -------------------------------------------------------------------------

def _as_sets(classes) -> set:
    return {frozenset(c) for c in classes}


def _fmt_classes(classes, order) -> str:
    return " ".join("{" + ",".join(fmt_label(x) for x in sorted(c, key=order.index)) + "}"
                    for c in sorted(classes, key=lambda c: min(order.index(x) for x in c)))


def _merge_doubled(classes) -> list:
    """Classes of doubled labels, projected to cells with (l,0) and (l,1) joined."""
    parent: dict = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            x = parent[x]
        return x

    for c in classes:
        cells = [lab[0] for lab in c]
        for x in cells:
            find(x)
        for x in cells[1:]:
            a, b = find(x), find(cells[0])
            if a != b:
                parent[a] = b
    groups: dict = {}
    for x in list(parent):
        groups.setdefault(find(x), set()).add(x)
    return list(groups.values())


def _regular_counts(con, name, side, dmat) -> dict:
    alg = con.algebra(name)
    simples = {c: con.simple(name, c, side) for c in dmat.cols}
    return composition_multiplicities(regular_module(alg, side), simples, con.radical(name))


def check_block_relations(con: AlphaConstruction) -> Report:
    rep = Report()
    A, om = con.A, con.omega
    cells = list(A.datum.poset)
    dA = con.decomposition("A")
    dP = con.decomposition("parabolic")
    dPl = con.decomposition("parabolic", LEFT)
    dQ = con.decomposition("quotient")
    dL = con.decomposition("levi")

    link_a = linkage_partition(dA)
    approx = _merge_doubled(linkage_partition(dP))
    rep.add("A-linkage-equals-parabolic", "-", _as_sets(link_a) == _as_sets(approx),
            f"A {_fmt_classes(link_a, cells)}; parabolic {_fmt_classes(approx, cells)}")

    bar = list(om.lambda_bar)
    refined = []
    for c in link_a:
        by_alpha: dict = {}
        for lam in c:
            if lam in bar:
                by_alpha.setdefault(con.alpha_of(lam), set()).add(lam)
        refined += list(by_alpha.values())
    link_q = linkage_partition(dQ)
    rep.add("quotient-linkage-alpha-refined", "-", _as_sets(link_q) == _as_sets(refined),
            f"quotient {_fmt_classes(link_q, bar)}; refinement {_fmt_classes(refined, bar)}")

    # projective multiplicities from the two decomposition matrices
    C = cartan_via_formula(dPl, dP)
    Cl = cartan_via_formula(dP, dPl)
    rep.add("cartan-left-right-transpose", "-",
            all(C.get(x, y) == Cl.get(y, x) for x in C.cols for y in C.cols))
    dims = {x: con.simple("parabolic", x, RIGHT).dim for x in dP.cols}
    dims_l = {x: con.simple("parabolic", x, LEFT).dim for x in dP.cols}
    for x in dP.cols:
        rep.add("parabolic-simple-dims-match", [x], dims[x] == dims_l[x], f"right {dims[x]}, left {dims_l[x]}")
    right_reg = _regular_counts(con, "parabolic", RIGHT, dP)
    left_reg = _regular_counts(con, "parabolic", LEFT, dPl)
    for y in dP.cols:
        want = sum(dims[x] * C.get(x, y) for x in dP.cols)
        rep.add("cartan-right-regular", [y], want == right_reg.get(y, 0),
                f"formula {want}, regular module {right_reg.get(y, 0)}")
        want_l = sum(dims_l[x] * Cl.get(x, y) for x in dP.cols)
        rep.add("cartan-left-regular", [y], want_l == left_reg.get(y, 0),
                f"formula {want_l}, regular module {left_reg.get(y, 0)}")

    blocks = cartan_blocks(C)
    where = {x: i for i, b in enumerate(blocks) for x in b}
    for lab in dP.rows:
        hit = {where[c] for c in dP.cols if dP.get(lab, c)}
        rep.add("standard-factors-one-block", [lab], len(hit) == 1, f"factors meet {len(hit)} blocks")
    by_block: dict = {}
    for lab in dP.rows:
        hit = [where[c] for c in dP.cols if dP.get(lab, c)]
        if hit:
            by_block.setdefault(hit[0], set()).add(lab)
    link_p = linkage_partition(dP)
    rep.add("parabolic-linkage-equals-blocks", "-", _as_sets(link_p) == _as_sets(by_block.values()))

    rep.note("levi linkage " + _fmt_classes(linkage_partition(dL), list(dL.rows)))
    rep.note("parabolic left linkage " + _fmt_classes(linkage_partition(dPl), list(dPl.rows)))
    return rep


# -- everything at once -------------------------------------------------------------

def full_report(con: AlphaConstruction) -> Report:
    """Assumptions, constructions, modules, decomposition numbers, condition (C), blocks."""
    rep = Report()
    rep.extend(con.assumptions)
    if not con.assumptions.ok:
        return rep
    try:
        con.levi, con.parabolic, con.parabolic_star, con.quotient
    except AssumptionError as exc:
        rep.add("constructions", "-", False, str(exc))
        return rep
    rep.extend(check_constructions(con))
    rep.extend(check_module_relations(con))
    rep.extend(check_decomposition_relations(con))
    cc = check_condition_C(con)
    rep.note("condition C " + ("holds" if cc.holds else "fails: " + cc.witness))
    rep.extend(cc.report)
    rep.extend(check_block_relations(con))
    return rep
