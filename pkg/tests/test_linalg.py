from fractions import Fraction

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from hhdeform.linalg import (
    Matrix,
    NotAComplexError,
    cohomology_dim,
    inverse,
    nullspace,
    rank,
    solve_linear,
)
from oracles import frac_rank

small = st.integers(-4, 4).map(Fraction)


@st.composite
def matrices(draw, max_dim=5):
    r = draw(st.integers(1, max_dim))
    c = draw(st.integers(1, max_dim))
    rows = draw(st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r))
    return Matrix.from_rows(rows, cols=c)


@st.composite
def invertible(draw, n):
    """Unit lower-triangular times upper-triangular with nonzero diagonal."""
    nonzero = st.sampled_from([1, -1, 2, -2, 3]).map(Fraction)
    lower = [[Fraction(i == j) if j >= i else draw(small) for j in range(n)] for i in range(n)]
    upper = [[draw(nonzero) if i == j else (draw(small) if j > i else Fraction(0)) for j in range(n)] for i in range(n)]
    return _mul(Matrix.from_rows(lower, cols=n), Matrix.from_rows(upper, cols=n))


def matvec(a: Matrix, x):
    return [sum(a.to_rows()[i][j] * x[j] for j in range(a.shape[1])) for i in range(a.shape[0])]


def test_rank_examples():
    assert rank(Matrix.identity(3)) == 3
    assert rank(Matrix.zeros(2, 2)) == 0
    assert rank(Matrix.from_rows([[1, 2], [2, 4]])) == 1


def test_solve_examples():
    b = [Fraction(3), Fraction(-1, 2), Fraction(7)]
    assert solve_linear(Matrix.identity(3), b) == b
    x = solve_linear(Matrix.from_rows([[1, 1]]), [2])
    assert x is not None and x[0] + x[1] == 2
    assert solve_linear(Matrix.from_rows([[0]]), [1]) is None


def test_solve_dimension_mismatch():
    with pytest.raises(ValueError):
        solve_linear(Matrix.identity(2), [1, 2, 3])


def test_cohomology_examples():
    n = 4
    assert cohomology_dim(Matrix.zeros(n, n), Matrix.zeros(n, n)) == n
    assert cohomology_dim(Matrix.identity(n), Matrix.zeros(n, n)) == 0
    # Q --(1,-1)--> Q^2 --(1 1)--> Q: kernel of d_out is 1-dim, spanned by the image
    d_in = Matrix.from_rows([[1], [-1]])
    d_out = Matrix.from_rows([[1, 1]])
    assert cohomology_dim(d_out, d_in) == 0
    assert cohomology_dim(Matrix.zeros(1, 2), d_in) == 1


def test_not_a_complex():
    with pytest.raises(NotAComplexError):
        cohomology_dim(Matrix.identity(2), Matrix.identity(2))


@given(matrices())
def test_rank_of_transpose(m):
    assert rank(m) == rank(m.transpose())


@given(matrices())
def test_rank_matches_fraction_elimination(m):
    assert rank(m) == frac_rank(m.to_rows())


@given(matrices(), st.data())
def test_solve_contract(a, data):
    b = data.draw(st.lists(small, min_size=a.shape[0], max_size=a.shape[0]))
    x = solve_linear(a, b)
    if x is None:
        aug = Matrix.from_rows([row + [bi] for row, bi in zip(a.to_rows(), b)])
        assert rank(aug) > rank(a)
    else:
        assert matvec(a, x) == b


@given(matrices())
def test_nullspace_is_kernel(m):
    basis = nullspace(m)
    assert len(basis) == m.shape[1] - rank(m)
    for v in basis:
        assert all(x == 0 for x in matvec(m, v))


def _mul(a: Matrix, b: Matrix) -> Matrix:
    ar, br = a.to_rows(), b.to_rows()
    rows = [[sum(ar[i][k] * br[k][j] for k in range(len(br))) for j in range(b.shape[1])] for i in range(a.shape[0])]
    return Matrix.from_rows(rows, cols=b.shape[1])


@settings(suppress_health_check=[HealthCheck.large_base_example])
@given(st.integers(1, 4), st.integers(1, 4), st.integers(1, 4), st.data())
def test_cohomology_basis_invariance(p, n, q, data):
    # random complex Q^p -> Q^n -> Q^q built as d_out = g h, d_in = k with h k = 0
    k = data.draw(st.lists(st.lists(small, min_size=p, max_size=p), min_size=n, max_size=n))
    d_in = Matrix.from_rows(k, cols=p)
    ker = nullspace(d_in.transpose())
    rows = []
    for _ in range(q):
        coeffs = data.draw(st.lists(small, min_size=len(ker), max_size=len(ker)))
        rows.append([sum(c * v[j] for c, v in zip(coeffs, ker)) for j in range(n)])
    d_out = Matrix.from_rows(rows, cols=n)
    before = cohomology_dim(d_out, d_in)
    g = data.draw(invertible(n))
    ginv = inverse(g)
    assert cohomology_dim(_mul(d_out, ginv), _mul(g, d_in)) == before
    assert before == n - frac_rank(d_out.to_rows()) - frac_rank(d_in.to_rows())
