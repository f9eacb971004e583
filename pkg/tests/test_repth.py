import pytest

from cellua.field import GF
from cellua.ingest import builtin
from cellua.modules import LEFT, RIGHT, regular_module, simple_module, standard_module
from cellua.repth import (UnsupportedCharacteristicError, cartan_blocks, cartan_via_formula,
                          composition_multiplicities, decomposition_matrix, hom_dimension, jacobson_radical,
                          linkage_partition, radical_power_dims, thread_count)

from expected import CELLS, DECOMP_A, HEADS
from oracles import multiplicities_by_oracle


@pytest.fixture(scope="module")
def path():
    return builtin("path-example")[0]


def test_radical_of_path_example(path):
    J = jacobson_radical(path)
    assert len(J) == 13
    assert radical_power_dims(path, J) == [13, 5]


@pytest.mark.parametrize("side", [RIGHT, LEFT])
def test_decomposition_matrix_frozen(path, side):
    d = decomposition_matrix(path, side)
    assert d.rows == CELLS and d.cols == HEADS
    assert d.as_lists() == DECOMP_A
    assert d.is_unitriangular(path.datum.poset)


def test_decomposition_over_f23_equals_rational(path):
    d23 = decomposition_matrix(path.to_field(GF(23)))
    assert d23.as_lists() == DECOMP_A


def test_small_characteristic_rejected(path):
    with pytest.raises(UnsupportedCharacteristicError):
        jacobson_radical(path.to_field(GF(17)))


@pytest.mark.parametrize("side", [RIGHT, LEFT])
def test_standard_multiplicities_match_oracle(path, side):
    J = jacobson_radical(path)
    simples = {lam: simple_module(path, lam, side) for lam in HEADS}
    for lam in CELLS:
        w = standard_module(path, lam, side)
        assert composition_multiplicities(w, simples, J) == multiplicities_by_oracle(w, simples)


def test_regular_module_multiplicities(path):
    J = jacobson_radical(path)
    simples = {lam: simple_module(path, lam) for lam in HEADS}
    mult = composition_multiplicities(regular_module(path), simples, J)
    assert mult == {"l1": 3, "l2": 4, "l3": 4, "l4": 4, "l5": 3}


def test_hom_between_simples(path):
    simples = {lam: simple_module(path, lam) for lam in HEADS}
    for a in HEADS:
        for b in HEADS:
            assert hom_dimension(simples[a], simples[b]) == int(a == b)


def test_linkage_single_block(path):
    parts = linkage_partition(decomposition_matrix(path))
    assert len(parts) == 1 and set(parts[0]) == set(CELLS)


def test_cartan_formula(path):
    c = cartan_via_formula(decomposition_matrix(path, LEFT), decomposition_matrix(path, RIGHT))
    # projective multiplicities sum to the regular module
    simples = {lam: simple_module(path, lam) for lam in HEADS}
    reg = composition_multiplicities(regular_module(path), simples, jacobson_radical(path))
    for y in HEADS:
        assert sum(simples[x].dim * c.get(x, y) for x in HEADS) == reg[y]
    assert len(cartan_blocks(c)) == 1


def test_matrix_algebra_is_semisimple():
    alg, _ = builtin("matrix:n=3")
    assert jacobson_radical(alg) == ()
    assert decomposition_matrix(alg).as_lists() == [[1]]


def test_thread_count_env(monkeypatch):
    monkeypatch.setenv("CELLUA_THREADS", "3")
    assert thread_count() == 3
    monkeypatch.setenv("CELLUA_THREADS", "junk")
    assert thread_count() >= 1


def test_threaded_matches_serial(path):
    assert decomposition_matrix(path, threads=4) == decomposition_matrix(path, threads=1)
