import random

import pytest

from cellua.algebra import Algebra, AlgebraMismatchError, CellDatum, ClosureError, quotient_by_cells, \
    right_coefficients, subalgebra, verify_cellular
from cellua.field import GF, QQ, FieldMismatchError
from cellua.ingest import builtin
from cellua.poset import Poset

from oracles import mutate, oracle_key, path_product


@pytest.fixture(scope="module")
def path():
    return builtin("path-example")[0]


def test_path_example_matches_product_oracle(path):
    keys = [oracle_key(n) for n in path.names]
    assert len(set(keys)) == path.dim == 18
    for i, x in enumerate(path.names):
        for j, y in enumerate(path.names):
            p = path_product(x, y)
            want = [0] * path.dim
            if p is not None:
                want[keys.index(p)] = 1
            assert list(path.mul_vec(path.basis_vector(i), path.basis_vector(j))) == want, (x, y)


@pytest.mark.parametrize("spec", ["path-example", "matrix:n=1", "matrix:n=3", "matrix:n=4,b=2", "matrix:n=5,b=5"])
def test_builtins_are_cellular(spec):
    alg, _ = builtin(spec)
    rep = verify_cellular(alg)
    assert rep.ok, rep.text()


def test_involution_is_anti_automorphism(path):
    for i in range(path.dim):
        for j in range(path.dim):
            a, b = path.basis_element(i), path.basis_element(j)
            assert (a * b).star() == b.star() * a.star()


def test_unit_acts_as_identity(path):
    one = path.one
    for i in range(path.dim):
        x = path.basis_element(i)
        assert one * x == x == x * one


def test_elements_of_different_algebras_do_not_mix(path):
    other = builtin("path-example")[0]
    with pytest.raises(AlgebraMismatchError):
        path.basis_element(0) * other.basis_element(0)


def test_field_change_keeps_structure(path):
    f23 = path.to_field(GF(23))
    assert f23.dim == path.dim
    assert verify_cellular(f23).ok
    with pytest.raises(FieldMismatchError):
        path.basis_element(0) * f23.field(3) + path.basis_element(1)


def test_right_coefficients_of_cell_element(path):
    # a12 e2 = a12 keeps column 2; a12 a21 falls into the higher cell l0
    e2 = right_coefficients(path, "l1", "2", path.basis_vector(path.index("e2")))
    assert e2 == {"1": QQ(0), "2": QQ(1)}
    a21 = right_coefficients(path, "l1", "2", path.basis_vector(path.index("a21")))
    assert not any(a21.values())


def test_mutations_are_detected(path):
    rng = random.Random(5)
    for _ in range(5):
        mut, info = mutate(path, rng)
        assert not verify_cellular(mut).ok, info


def test_associativity_failure_reported():
    # two idempotent-looking elements whose product table is not associative
    names = ["x", "y"]
    table = {(0, 0): {0: 1}, (1, 1): {1: 1}, (0, 1): {1: 1}, (1, 0): {0: 1}}
    datum = CellDatum.cellular(Poset(["a", "b"], [("a", "b")]), {"a": ["1"], "b": ["1"]})
    alg = Algebra(QQ, names, table, {0: 1, 1: 1}, datum)
    rep = verify_cellular(alg)
    assert not rep.ok
    assert any(r.tag == "unit" and not r.passed for r in rep)


def test_subalgebra_closure_enforced(path):
    d = path.datum
    sub = CellDatum.cellular(Poset(["l1"]), {"l1": ["1", "2"]})
    with pytest.raises(ClosureError):
        subalgebra(path, sub, lambda lab: path.pos[lab])


def test_quotient_by_top_cell(path):
    ideal = [i for i, c in enumerate(path.cell_of) if c == "l0"]
    keep = [c for c in path.datum.poset if c != "l0"]
    d = path.datum
    datum = CellDatum(d.poset.restrict(keep), {c: d.rows[c] for c in keep}, {c: d.cols[c] for c in keep})
    q = quotient_by_cells(path, ideal, datum, lambda lab: path.pos[lab], "q")
    assert q.dim == 17
    assert verify_cellular(q).ok


def test_quotient_by_non_ideal_rejected(path):
    ideal = [i for i, c in enumerate(path.cell_of) if c == "l5"]
    keep = [c for c in path.datum.poset if c != "l5"]
    d = path.datum
    datum = CellDatum(d.poset.restrict(keep), {c: d.rows[c] for c in keep}, {c: d.cols[c] for c in keep})
    with pytest.raises(ClosureError):
        quotient_by_cells(path, ideal, datum, lambda lab: path.pos[lab])


def test_cell_datum_validation():
    with pytest.raises(ValueError):
        CellDatum.cellular(Poset(["a"]), {"a": []})
    with pytest.raises(ValueError):
        CellDatum.cellular(Poset(["a"]), {"a": ["1", "1"]})
    with pytest.raises(ValueError):
        CellDatum.cellular(Poset(["a"]), {"a": ["1"], "b": ["1"]})
