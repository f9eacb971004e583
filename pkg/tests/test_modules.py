import pytest

from cellua.algebra import NotCellularError
from cellua.ingest import builtin
from cellua.linalg import is_subspace
from cellua.modules import (LEFT, RIGHT, beta, direct_sum, gram, pairing, radical_vectors, regular_module,
                            representation_failures, simple_dimension, simple_module, standard_module)
from cellua.repth import jacobson_radical

from expected import CELLS, HEADS
from oracles import multiplicities_by_oracle


@pytest.fixture(scope="module")
def path():
    return builtin("path-example")[0]


@pytest.mark.parametrize("side", [RIGHT, LEFT])
def test_standard_modules_are_modules(path, side):
    for lam in CELLS:
        m = standard_module(path, lam, side)
        assert m.dim == len(path.datum.cols[lam])
        assert representation_failures(m) == []


def test_simple_dimensions(path):
    dims = {lam: simple_dimension(path, lam) for lam in CELLS}
    assert dims == {"l0": 0, "l1": 1, "l2": 1, "l3": 1, "l4": 1, "l5": 1}


def test_gram_is_symmetric_for_cellular(path):
    for lam in CELLS:
        g = gram(path, lam)
        assert g.matrix == g.matrix.T
        assert g.rank == simple_dimension(path, lam)


def test_beta_is_transpose_of_pairing(path):
    for lam in CELLS:
        assert beta(path, lam) == pairing(path, lam).T


def test_radical_is_submodule(path):
    for lam in CELLS:
        w = standard_module(path, lam)
        rad = radical_vectors(path, lam)
        for v in rad:
            for i in range(path.dim):
                img = w.act(v, i)
                assert is_subspace([img], rad, w.dim, path.field)


@pytest.mark.parametrize("side", [RIGHT, LEFT])
def test_simple_modules_match_oracle(path, side):
    simples = {lam: simple_module(path, lam, side) for lam in HEADS}
    for lam in HEADS:
        assert simples[lam].dim == 1
        assert multiplicities_by_oracle(simples[lam], simples) == {lam: 1}


def test_regular_module_dimension_and_radical(path):
    reg = regular_module(path)
    assert reg.dim == 18
    assert representation_failures(reg) == []
    assert len(jacobson_radical(path)) == 13


def test_direct_sum_dims(path):
    ms = [standard_module(path, lam) for lam in CELLS]
    s = direct_sum(ms)
    assert s.dim == sum(m.dim for m in ms)
    assert representation_failures(s) == []


def test_unknown_cell(path):
    with pytest.raises(KeyError):
        standard_module(path, "l9")


def test_bad_side(path):
    with pytest.raises(ValueError):
        standard_module(path, "l1", "middle")


def test_gram_needs_involution():
    from cellua.alpha import AlphaConstruction
    alg, ad = builtin("matrix:n=3,b=2")
    par = AlphaConstruction(alg, ad).parabolic
    with pytest.raises(NotCellularError):
        gram(par, par.datum.poset.elements[0])
    assert beta(par, par.datum.poset.elements[0]) is not None
