import random
from fractions import Fraction as F

import numpy as np
import pytest

from helpers import a2_algebras, b2_algebras, catalog_all
from nilrad import catalog
from nilrad.derivations import (
    derivation_space,
    eigenvalue_type,
    is_derivation,
    necessary_condition,
    pre_einstein,
)
from nilrad.errors import NilradError, NotTorusAdaptedError
from nilrad.lie_core import LieAlgebra

H3 = catalog.heisenberg(3)
SKEW = LieAlgebra(4, {(1, 2, 3): 1, (1, 3, 4): 1, (2, 3, 4): 1}, name="skew")


def tensor(alg):
    n = alg.dim
    C = np.zeros((n, n, n))
    for (i, j, k), c in alg.brackets.items():
        C[i - 1, j - 1, k - 1] = float(c)
        C[j - 1, i - 1, k - 1] = -float(c)
    return C


def der_dim_oracle(alg) -> int:
    """n^2 minus the rank of D -> D[.,.] - [D.,.] - [.,D.] assembled densely."""
    n = alg.dim
    C = tensor(alg)
    cols = []
    for a in range(n):
        for b in range(n):
            D = np.zeros((n, n))
            D[a, b] = 1.0
            # (D[e_i,e_j])_k - ([De_i,e_j])_k - ([e_i,De_j])_k
            t1 = np.einsum("ijl,kl->ijk", C, D)
            t2 = np.einsum("li,ljk->ijk", D, C)
            t3 = np.einsum("lj,ilk->ijk", D, C)
            cols.append((t1 - t2 - t3).ravel())
    return n * n - np.linalg.matrix_rank(np.array(cols).T, tol=1e-9)


@pytest.mark.parametrize("alg, dim", [
    (H3, 6), (catalog.abelian(3), 9), (catalog.abelian(1), 1), (catalog.m0(4), 7),
])
def test_der_dim_examples(alg, dim):
    assert derivation_space(alg).dim == dim


def test_der_dim_matches_dense_oracle():
    for alg in catalog_all()[::3]:
        assert derivation_space(alg).dim == der_dim_oracle(alg), alg.name


def test_every_basis_element_is_derivation():
    for alg in [H3, catalog.m0(5), catalog.witt(7), catalog.b6(), catalog.g_alpha(9, F(1, 2))]:
        for D in derivation_space(alg).basis:
            assert is_derivation(alg, D.matrix)


def test_is_derivation_rejects():
    n = 3
    bad = [[F(int(a == b == 0)) for b in range(n)] for a in range(n)]
    assert not is_derivation(H3, bad)


def test_der_dim_permutation_invariant():
    rng = random.Random(1)
    for alg in (catalog.witt(7), catalog.b6(), catalog.g_alpha(8, -1)):
        perm = list(range(1, alg.dim + 1))
        rng.shuffle(perm)
        assert derivation_space(alg.permuted(perm)).dim == derivation_space(alg).dim


@pytest.mark.parametrize("alg, diag", [
    (H3, (F(2, 3), F(2, 3), F(4, 3))),
    (catalog.m0(4), (F(1, 3), F(2, 3), F(1), F(4, 3))),
    (catalog.abelian(3), (1, 1, 1)),
])
def test_pre_einstein_examples(alg, diag):
    assert pre_einstein(alg).diag == tuple(F(x) for x in diag)


@pytest.mark.parametrize("t", [2, -1, F(1, 2), 5])
def test_pre_einstein_nt8(t):
    phi = pre_einstein(catalog.nt8(t)).diag
    ratio = phi[0] / 2
    assert phi == tuple(ratio * (i + 1) for i in range(1, 9))


def test_eigen_types():
    assert str(eigenvalue_type(pre_einstein(H3))) == "(1<2; 2,1)"
    assert str(eigenvalue_type(pre_einstein(catalog.m0(4)))) == "(1<2<3<4; 1,1,1,1)"
    et = eigenvalue_type(pre_einstein(catalog.b6()))
    assert et.values == (1, 2, 3, 4, 5, 7) and et.simple
    with pytest.raises(NilradError):
        eigenvalue_type([F(1), F(-1)])


def test_eigen_types_a2_b2():
    for alg in a2_algebras(range(7, 10)):
        et = pre_einstein(alg).eigen_type
        assert et.values == tuple(range(1, alg.dim + 1)) and et.simple, alg.name
    for alg in b2_algebras():
        n = alg.dim
        assert pre_einstein(alg).eigen_type.values == (*range(1, n), n + 1), alg.name


def test_trace_condition_all_der():
    for alg in catalog_all():
        der = derivation_space(alg)
        phi = pre_einstein(alg, der).diag
        for psi in der.basis:
            d = psi.diagonal()
            assert sum(p * x for p, x in zip(phi, d)) == sum(d), alg.name


def test_trace_condition_diagonal_derivations():
    # every diagonal derivation of m0(6) is spanned by the two gradings
    alg = catalog.m0(6)
    phi = pre_einstein(alg).diag
    for s, t in [(1, 0), (0, 1), (2, -3), (F(1, 2), 5)]:
        psi = [s] + [s * (i - 1) + t for i in range(2, 7)]
        M = [[psi[a] if a == b else 0 for b in range(6)] for a in range(6)]
        assert is_derivation(alg, M)
        assert sum(p * x for p, x in zip(phi, psi)) == sum(psi)


def test_pre_einstein_scale_invariant():
    for alg in (catalog.witt(8), catalog.g_alpha(10, 0), catalog.b12("+")):
        factors = {t: F(k + 2, 3) for k, t in enumerate(alg.support())}
        assert pre_einstein(alg.scaled(factors)).diag == pre_einstein(alg).diag
        assert pre_einstein(alg.scaled(F(-7, 2))).diag == pre_einstein(alg).diag


def test_pre_einstein_rational_over_sqrt10():
    phi = pre_einstein(catalog.b12("-")).diag
    assert all(isinstance(x, F) for x in phi)


def test_not_torus_adapted():
    with pytest.raises(NotTorusAdaptedError, match="basis not torus-adapted"):
        pre_einstein(SKEW)


def test_necessary_examples():
    rep = necessary_condition(catalog.m0(4), pre_einstein(catalog.m0(4)))
    assert rep.ok and set(rep.weights) <= {0, F(1, 3), F(2, 3), 1}
    ab = catalog.abelian(3)
    rep = necessary_condition(ab, pre_einstein(ab))
    assert rep.ok and rep.weights == (0,)
    rep = necessary_condition(H3, pre_einstein(H3))
    assert rep.ok and set(rep.weights) <= {0, F(2, 3)}


def test_weight_dims_sum_to_der_dim():
    for alg in (catalog.m0(4), H3, catalog.witt(8), catalog.b8()):
        rep = necessary_condition(alg, pre_einstein(alg))
        assert sum(k for _, k in rep.weight_dims) == derivation_space(alg).dim
