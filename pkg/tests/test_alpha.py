import pytest

from cellua.algebra import verify_cellular
from cellua.alpha import AlphaConstruction, AssumptionError, constant_alpha, verify_assumptions
from cellua.ingest import builtin
from cellua.modules import LEFT, RIGHT
from cellua.poset import Poset

from expected import (DECOMP_LEVI, DECOMP_PARABOLIC, DECOMP_QUOTIENT, HEADS, LEVI_COLS, LEVI_ROWS,
                      PATH_DIMS, matrix_dims)


def test_assumptions_hold_on_builtins(path_con, matrix_con, constant_con):
    for con in (path_con, matrix_con, constant_con):
        assert con.assumptions.ok, con.assumptions.text()


def test_tableau_split(path_con):
    p = path_con.partition
    assert p.plus("l3") == ("3",) and p.minus("l3") == ("4",)
    assert p.minus("l0") == ("1",) and p.plus("l0") == ()
    for lam in ("l1", "l2", "l4", "l5"):
        assert p.minus(lam) == ()


def test_matrix_split(matrix_con):
    n, = matrix_con.A.datum.poset.elements
    p = matrix_con.partition
    assert p.plus(n) == ("2", "3", "4") and p.minus(n) == ("1",)


def test_omega(path_con):
    om = path_con.omega
    assert tuple(om.poset) == LEVI_ROWS
    assert om.hat == (("l0", 1), ("l3", 1))
    assert om.lambda_bar == HEADS
    # every eps = 1 label lies above every eps = 0 label
    for h in om.hat:
        for b in om.bar:
            assert om.poset.gt(h, b)


def test_path_dimensions(path_con):
    assert path_con.dimensions() == PATH_DIMS


@pytest.mark.parametrize("n,b", [(2, 2), (3, 2), (3, 3), (4, 2), (4, 3), (5, 4)])
def test_matrix_dimensions(n, b):
    con = AlphaConstruction(*builtin(f"matrix:n={n},b={b}"))
    want = matrix_dims(n, b)
    dims = con.dimensions()
    assert {k: dims[k] for k in want} == want
    assert dims["parabolic-star"] == dims["parabolic"]


@pytest.mark.parametrize("name", ["levi", "quotient"])
def test_derived_algebras_cellular(path_con, name):
    assert verify_cellular(path_con.algebra(name)).ok


def test_parabolic_not_involutive(path_con):
    par = path_con.parabolic
    assert not par.involutive
    assert verify_cellular(par).ok


def test_parabolic_star_is_levi_on_path(path_con):
    assert path_con.parabolic_star.dim == path_con.parabolic.dim
    assert set(path_con.parabolic_star.parent_positions) & set(path_con.parabolic.parent_positions) \
        == set(path_con.levi.parent_positions)


@pytest.mark.parametrize("side", [RIGHT, LEFT])
def test_levi_decomposition_frozen(path_con, side):
    d = path_con.decomposition("levi", side)
    assert d.rows == LEVI_ROWS and d.cols == LEVI_COLS
    assert d.as_lists() == DECOMP_LEVI


def test_parabolic_decomposition_frozen(path_con):
    d = path_con.decomposition("parabolic", RIGHT)
    assert d.rows == LEVI_ROWS
    assert d.as_lists() == DECOMP_PARABOLIC
    # the left side matches the levi matrix
    assert path_con.decomposition("parabolic", LEFT).as_lists() == DECOMP_LEVI


@pytest.mark.parametrize("side", [RIGHT, LEFT])
def test_quotient_decomposition_frozen(path_con, side):
    d = path_con.decomposition("quotient", side)
    assert d.rows == HEADS and d.cols == HEADS
    assert d.as_lists() == DECOMP_QUOTIENT


def test_f23_matches_rational(path_con, path_con_f23):
    assert path_con_f23.dimensions() == path_con.dimensions()
    for name in ("levi", "parabolic", "quotient"):
        assert path_con_f23.decomposition(name).as_lists() == path_con.decomposition(name).as_lists()


def test_constant_alpha_gives_trivial_split(constant_con, path_con):
    om = constant_con.omega
    assert om.hat == ()
    assert constant_con.levi.dim == constant_con.A.dim == constant_con.quotient.dim
    assert constant_con.decomposition("quotient").as_lists() == path_con.decomposition("A").as_lists()


def test_missing_idempotent_breaks_sum(path_con):
    rep = verify_assumptions(path_con.A, path_con.ad.without("5"))
    assert not rep.ok
    assert "A2-sum" in {r.tag for r in rep.failures}
    with pytest.raises(AssumptionError):
        AlphaConstruction(path_con.A, path_con.ad.without("5")).partition


def test_non_monotone_alpha_rejected(path_con):
    ad = path_con.ad
    alpha = dict(ad.alpha, l5="t0")
    rep = verify_assumptions(path_con.A, ad.with_alpha(alpha))
    assert not rep.ok
    assert "alpha-order" in {r.tag for r in rep.failures}


def test_reordered_target_poset_rejected(path_con):
    # with t45 above t123, l3 (t123) no longer dominates its fixer 4 (t45)
    ad = path_con.ad
    x = Poset(["t0", "t45", "t123"], [("t0", "t45"), ("t45", "t123")])
    rep = verify_assumptions(path_con.A, ad.with_alpha(ad.alpha, x))
    assert "alpha-order" in {r.tag for r in rep.failures}


def test_unknown_algebra_name(path_con):
    with pytest.raises(KeyError):
        path_con.algebra("nope")


def test_constant_alpha_helper(path_con):
    ad = constant_alpha(path_con.ad, "pt")
    assert set(ad.alpha.values()) == {"pt"}
