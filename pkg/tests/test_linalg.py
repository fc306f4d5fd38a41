from fractions import Fraction

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from nilrad.linalg import dense_rows, nullspace, rank, solve
from nilrad.simplex import linprog_exact

small = st.integers(-3, 3)
matrices = st.integers(1, 5).flatmap(
    lambda m: st.integers(1, 6).flatmap(
        lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=m, max_size=m)
    )
)


@settings(max_examples=200, deadline=None)
@given(matrices)
def test_rank_matches_numpy(M):
    assert rank(M) == np.linalg.matrix_rank(np.array(M, dtype=float))


@settings(max_examples=200, deadline=None)
@given(matrices)
def test_nullspace_is_kernel(M):
    ncols = len(M[0])
    basis = nullspace(dense_rows(M), ncols)
    assert len(basis) == ncols - rank(M)
    for v in basis:
        assert all(sum(Fraction(a) * x for a, x in zip(row, v)) == 0 for row in M)


@settings(max_examples=200, deadline=None)
@given(matrices, st.data())
def test_solve(M, data):
    ncols = len(M[0])
    x0 = data.draw(st.lists(small, min_size=ncols, max_size=ncols))
    b = [sum(a * x for a, x in zip(row, x0)) for row in M]
    x, nullity = solve(dense_rows(M), b, ncols)
    assert nullity == ncols - rank(M)
    assert [sum(a * xi for a, xi in zip(row, x)) for row in M] == b


def test_solve_inconsistent():
    assert solve(dense_rows([[1, 1], [1, 1]]), [1, 2], 2) is None


def test_simplex_small():
    # min -x - y  s.t. x + 2y + s1 = 4, 3x + y + s2 = 6
    res = linprog_exact([-1, -1, 0, 0], [[1, 2, 1, 0], [3, 1, 0, 1]], [4, 6])
    assert res.status == "optimal"
    assert res.x[:2] == (Fraction(8, 5), Fraction(6, 5))
    assert res.value == Fraction(-14, 5)


def test_simplex_infeasible_and_unbounded():
    assert linprog_exact([0, 0], [[1, 1]], [-1]).status == "infeasible"
    assert linprog_exact([-1, 0], [[1, -1]], [0]).status == "unbounded"


def test_simplex_redundant_rows():
    res = linprog_exact([1, 1], [[1, 1], [2, 2]], [2, 4])
    assert res.status == "optimal" and res.value == 2


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 4), st.integers(2, 6), st.data())
def test_simplex_matches_scipy(m, n, data):
    from scipy.optimize import linprog

    A = data.draw(st.lists(st.lists(small, min_size=n, max_size=n), min_size=m, max_size=m))
    x0 = data.draw(st.lists(st.integers(0, 3), min_size=n, max_size=n))
    b = [sum(a * x for a, x in zip(row, x0)) for row in A]
    c = data.draw(st.lists(st.integers(0, 4), min_size=n, max_size=n))
    res = linprog_exact(c, A, b)
    ref = linprog(c, A_eq=A, b_eq=b, bounds=[(0, None)] * n, method="highs")
    assert res.status == "optimal" and ref.status == 0
    assert abs(float(res.value) - ref.fun) < 1e-7
    assert all(x >= 0 for x in res.x)
    assert [sum(a * x for a, x in zip(row, res.x)) for row in A] == b
