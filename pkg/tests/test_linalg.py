from fractions import Fraction

from hypothesis import given, settings, strategies as st

from cellua.field import GF, QQ
from cellua.linalg import Coordinates, Matrix, intersect_spaces, is_subspace, nullspace, rank, row_basis, \
    solve, sum_spaces, vec_matmul

from oracles import rref as oracle_rref

small = st.integers(-4, 4)


def matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)))


def test_identity_and_transpose():
    m = Matrix([[1, 2], [3, 4]])
    assert m.T.T == m
    assert Matrix.identity(2) @ m == m
    assert m.rank() == 2


def test_solve_inconsistent_returns_none():
    m = Matrix([[1, 1], [2, 2]])
    assert solve(m, [1, 3]) is None
    x = solve(m, [1, 2])
    assert m.apply(x) == (Fraction(1), Fraction(2))


@settings(max_examples=60)
@given(matrices())
def test_rank_nullity(rows):
    m = Matrix(rows, QQ)
    ker = nullspace(m)
    assert rank(m) + len(ker) == m.ncols
    for v in ker:
        assert not any(m.apply(v))


@settings(max_examples=60)
@given(matrices())
def test_rank_matches_oracle(rows):
    ref = [[Fraction(x) for x in r] for r in rows]
    assert rank(Matrix(rows, QQ)) == len(oracle_rref(ref, len(rows[0])))


@settings(max_examples=40)
@given(matrices(), st.sampled_from([2, 3, 5, 23]))
def test_rank_mod_p_at_most_rational(rows, p):
    assert rank(Matrix(rows, GF(p))) <= rank(Matrix(rows, QQ))


@settings(max_examples=60)
@given(matrices(4, 4), matrices(4, 4))
def test_sum_and_intersection_dimensions(a, b):
    n = len(a[0])
    b = [r[:n] + [0] * (n - len(r)) for r in b]
    a = [[QQ(x) for x in r] for r in a]
    b = [[QQ(x) for x in r] for r in b]
    s = sum_spaces(a, b, n, QQ)
    i = intersect_spaces(a, b, n, QQ)
    assert len(s) + len(i) == len(row_basis(a, n, QQ)) + len(row_basis(b, n, QQ))
    assert is_subspace(i, a, n, QQ) and is_subspace(i, b, n, QQ)


@settings(max_examples=60)
@given(matrices(4, 4))
def test_row_basis_is_canonical(rows):
    n = len(rows[0])
    r1 = row_basis([[QQ(x) for x in r] for r in rows], n, QQ)
    r2 = row_basis(list(reversed(r1)) + [tuple(2 * x for x in v) for v in r1], n, QQ)
    assert r1 == r2


@settings(max_examples=40)
@given(matrices(4, 4))
def test_coordinates_reconstruct(rows):
    n = len(rows[0])
    basis = row_basis([[QQ(x) for x in r] for r in rows], n, QQ)
    if not basis:
        return
    coords = Coordinates(basis, n, QQ)
    v = [sum((basis[k][j] * (k + 1) for k in range(len(basis))), Fraction(0)) for j in range(n)]
    c = coords(v)
    assert list(c) == [Fraction(k + 1) for k in range(len(basis))]


def test_vec_matmul():
    m = Matrix([[1, 2], [3, 4]])
    assert vec_matmul((1, 1), m) == (4, 6)
