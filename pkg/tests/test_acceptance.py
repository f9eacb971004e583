"""One check per acceptance criterion; each prints a PASS or FAIL line.

Run directly (python3 tests/test_acceptance.py) or under pytest, where the
lines are also repeated in the terminal summary.
"""

import os
import random
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from cellua.algebra import verify_cellular  # noqa: E402
from cellua.alpha import AlphaConstruction, verify_assumptions  # noqa: E402
from cellua.field import GF, QQ  # noqa: E402
from cellua.ingest import builtin  # noqa: E402
from cellua.modules import LEFT, RIGHT, simple_module  # noqa: E402
from cellua.relations import (check_block_relations, check_condition_C, check_constructions,  # noqa: E402
                              check_decomposition_relations, check_forms, check_module_relations)
from cellua.repth import composition_multiplicities, decomposition_matrix, jacobson_radical, \
    linkage_partition  # noqa: E402

from expected import (DECOMP_A, DECOMP_LEVI, DECOMP_QUOTIENT, HEADS, LEVI_ROWS,  # noqa: E402
                      PATH_DIMS, matrix_dims)
from oracles import multiplicities_by_oracle, mutate  # noqa: E402

RESULTS: dict = {}
BUILTINS = ["path-example", "path-example:alpha=constant"] + [f"matrix:n={n}" for n in range(1, 6)] \
    + [f"matrix:n={n},b={b}" for n in range(2, 6) for b in range(2, n + 1)]


def _record(n, ok, what, detail=""):
    line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {what}" + (f" ({detail})" if detail and not ok else "")
    RESULTS[n] = line
    print(line)
    return ok


def _con(spec, field=None):
    return AlphaConstruction(*(builtin(spec, field) if field else builtin(spec)))


def criterion_1():
    got = [decomposition_matrix(builtin("path-example", f)[0]).as_lists() for f in (QQ, GF(23))]
    ok = all(g == DECOMP_A for g in got)
    return _record(1, ok, "path example decomposition matrix of A over Q and F_23", str(got))


def criterion_2():
    con = _con("path-example")
    dl, dq = con.decomposition("levi"), con.decomposition("quotient")
    ok = dl.rows == LEVI_ROWS and dl.as_lists() == DECOMP_LEVI and dq.rows == HEADS \
        and dq.as_lists() == DECOMP_QUOTIENT
    return _record(2, ok, "levi 7x5 and quotient 5x5 decomposition matrices", f"{dl.as_lists()} {dq.as_lists()}")


def criterion_3():
    con = _con("path-example")
    om = con.omega
    heads = tuple(con.decomposition("levi").cols)
    ok = (tuple(c[0] for c in heads) == HEADS and all(c[1] == 0 for c in heads)
          and set(om.poset) == {("l0", 1), ("l3", 1)} | {(c, 0) for c in HEADS}
          and set(om.bar) == {(c, 0) for c in HEADS} and om.lambda_bar == HEADS)
    return _record(3, ok, "nonzero heads, doubled labels and bar labels", f"{list(om.poset)} {heads}")


def criterion_4():
    bad = []
    dims = _con("path-example").dimensions()
    if {k: dims[k] for k in PATH_DIMS} != PATH_DIMS:
        bad.append(("path-example", dims))
    for n in (3, 4, 5):
        for b in range(2, n + 1):
            d = _con(f"matrix:n={n},b={b}").dimensions()
            want = matrix_dims(n, b)
            if {k: d[k] for k in want} != want:
                bad.append((n, b, d))
    return _record(4, not bad, "dimensions of the path example and matrix algebras", str(bad))


def criterion_5():
    bad = []
    for n in range(1, 6):
        alg = builtin(f"matrix:n={n}")[0]
        J = jacobson_radical(alg)
        d = decomposition_matrix(alg, J=J)
        if J or d.as_lists() != [[1]] or len(linkage_partition(d)) != 1:
            bad.append(n)
    return _record(5, not bad, "full matrix algebras are semisimple with one block", str(bad))


def criterion_6():
    bad = []
    for spec in ("path-example", "matrix:n=4,b=2"):
        con = _con(spec)
        for check in (check_constructions, check_module_relations, check_decomposition_relations):
            rep = check(con)
            bad += [f"{spec}: {r.line()}" for r in rep.failures]
            if not len(rep):
                bad.append(f"{spec}: {check.__name__} ran no checks")
    return _record(6, not bad, "entrywise identities and module isomorphisms", "; ".join(bad[:3]))


def criterion_7():
    con = _con("path-example")
    rep = check_block_relations(con)
    need = {"A-linkage-equals-parabolic", "quotient-linkage-alpha-refined", "cartan-left-right-transpose"}
    q = {frozenset(c) for c in linkage_partition(con.decomposition("quotient"))}
    ok = rep.ok and need <= rep.tags() and q == {frozenset(HEADS[:3]), frozenset(HEADS[3:])}
    return _record(7, ok, "linkage classes and projective multiplicity symmetry", rep.text())


def criterion_8():
    path, ad = builtin("path-example")
    problems = []
    rng = random.Random(2024)
    for _ in range(50):
        mut, info = mutate(path, rng)
        if verify_cellular(mut).ok and verify_assumptions(mut, ad).ok:
            problems.append(f"mutation {info} accepted")
    for spec in BUILTINS:
        alg, sad = builtin(spec)
        names = ["A"] if sad is None else ["A", "levi", "quotient"]
        con = AlphaConstruction(alg, sad) if sad is not None else None
        for name in names:
            a = alg if con is None else con.algebra(name)
            if decomposition_matrix(a, RIGHT) != decomposition_matrix(a, LEFT):
                problems.append(f"{spec} {name}: left and right differ")
        if con is not None:
            problems += [f"{spec}: {r.line()}" for r in check_forms(con).failures]
    con = _con("path-example")
    for name in ("A", "levi", "parabolic", "quotient"):
        for side in (RIGHT, LEFT):
            a = con.algebra(name)
            simples = {c: con.simple(name, c, side) for c in con.nonzero(name)}
            J = con.radical(name)
            for lab in a.datum.poset:
                w = con.standard(name, lab, side)
                if composition_multiplicities(w, simples, J) != multiplicities_by_oracle(w, simples):
                    problems.append(f"{name} {side} {lab}: engine and oracle disagree")
    return _record(8, not problems, "mutations caught, left equals right, block-diagonal forms, oracle agreement",
                   "; ".join(problems[:3]))


def criterion_9():
    m = check_condition_C(_con("matrix:n=4,b=2"))
    p = check_condition_C(_con("path-example"))
    ok = m.holds and m.report.ok and len(m.report) > 0 and not p.holds and all(c in p.witness for c in HEADS)
    return _record(9, ok, "condition C holds on matrix:n=4,b=2 and fails on the path example",
                   f"matrix {m.holds}, path {p.holds}: {p.witness}")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7,
            criterion_8, criterion_9]


@pytest.mark.parametrize("crit", CRITERIA, ids=[f"criterion_{i}" for i in range(1, 10)])
def test_acceptance(crit):
    assert crit(), RESULTS.get(CRITERIA.index(crit) + 1)


if __name__ == "__main__":
    results = [c() for c in CRITERIA]
    raise SystemExit(0 if all(results) else 1)
