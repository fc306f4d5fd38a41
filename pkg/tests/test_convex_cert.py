from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import catalog_all
from nilrad import catalog
from nilrad.convex_cert import (
    NO,
    YES,
    AlphaSystem,
    Certificate,
    alpha_set,
    decide_einstein,
    format_certificate,
    interior_lp,
    parse_certificate,
    separation_gap,
    separator_lp,
    solution_polytope_dim,
    system_consistent,
    verify_certificate,
    verify_convex_combination,
)
from nilrad.derivations import pre_einstein
from nilrad.errors import CertificateError, NotApplicableError


def S_of(alg):
    return alpha_set(alg)


def test_alpha_set_m0_4():
    S = alpha_set(catalog.m0(4), pre_einstein(catalog.m0(4)))
    assert S.triples == ((1, 2, 3), (1, 3, 4))
    assert S.alphas == ((1, 1, -1, 0), (1, 0, 1, -1))
    assert S.U == ((3, 0), (0, 3))
    assert S.p == (1, F(1, 2), 0, F(-1, 2))


def test_alpha_set_errors():
    h3 = catalog.heisenberg(3)
    with pytest.raises(NotApplicableError, match="inapplicable"):
        alpha_set(h3, pre_einstein(h3))
    with pytest.raises(NotApplicableError, match="no roots"):
        alpha_set(catalog.abelian(1), pre_einstein(catalog.abelian(1)))


def test_alpha_order_lexicographic():
    for alg in catalog_all()[::5]:
        if alg.support():
            S = S_of(alg)
            assert list(S.triples) == sorted(S.triples)


def test_decide_m0_4():
    cert = decide_einstein(S_of(catalog.m0(4)))
    assert cert.verdict == YES and cert.v == (F(1, 3), F(1, 3))


def test_decide_b6_and_paper_vector():
    S = S_of(catalog.b6())
    assert decide_einstein(S).verdict == YES
    v = tuple(F(x, 52) for x in (13, 16, 12, 4, 13, 12))
    assert verify_certificate(S, Certificate(YES, S.triples, v=v))


def test_decide_m2_8_and_paper_vector():
    S = S_of(catalog.m2(8))
    cert = decide_einstein(S)
    assert cert.verdict == NO
    a = tuple(F(x) for x in (6, 12, -18, -12, -6, 0, 6, 12))
    assert verify_certificate(S, Certificate(NO, S.triples, a=a))
    assert separation_gap(S, a) == F(-27, 7)


def test_verify_m01_9_paper_vector():
    S = S_of(catalog.m01(9))
    a = tuple(F(x) for x in (1, -3, -2, -1, 0, 1, 2, 3, -1))
    assert verify_certificate(S, Certificate(NO, S.triples, a=a))
    assert separation_gap(S, a) < 0


def test_verify_rejects():
    S = S_of(catalog.m0(4))
    assert not verify_certificate(S, Certificate(YES, S.triples, v=(F(1, 3), F(1, 2))))
    assert not verify_certificate(S, Certificate(YES, S.triples, v=(F(2, 3), F(0))))
    with pytest.raises(CertificateError):
        verify_certificate(S, Certificate(YES, S.triples, v=(F(1, 3),)))
    with pytest.raises(CertificateError):
        verify_certificate(S, Certificate(YES, ((1, 2, 3),), v=(F(1, 3),)))
    # a = 0 is not a separator
    assert not verify_certificate(S, Certificate(NO, S.triples, a=(0, 0, 0, 0)))


def test_certificate_shape_checked():
    with pytest.raises(CertificateError):
        Certificate(YES, (), a=(F(1),))
    with pytest.raises(CertificateError):
        Certificate("MAYBE", (), v=(F(1),))


@pytest.mark.parametrize("alg, dim", [
    (catalog.nt8(2), 2), (catalog.m0(4), 0), (catalog.heisenberg(3), 0),
])
def test_polytope_dim(alg, dim):
    assert solution_polytope_dim(S_of(alg)) == dim


def test_nt8_support_invariance():
    systems = [alpha_set(catalog.nt8(t), pre_einstein(catalog.nt8(t))) for t in (2, -1, F(1, 2))]
    assert systems[0] == systems[1] == systems[2]
    assert systems[0].N == 9
    assert decide_einstein(systems[0]).verdict == YES


def test_scaling_leaves_system_unchanged():
    alg = catalog.g_alpha(10, 0)
    scaled = alg.scaled({t: F(i + 1, 7) for i, t in enumerate(alg.support())})
    assert alpha_set(scaled) == alpha_set(alg)


def test_structural_invariants_on_catalog():
    for alg in catalog_all():
        if not alg.support():
            continue
        S = S_of(alg)
        U = np.array(S.U, dtype=float)
        assert (U == U.T).all()
        assert np.linalg.eigvalsh(U).min() > -1e-9
        for (i, j, k), row, a in zip(S.triples, S.U, S.alphas):
            assert sum(a) == 1
            if k not in (i, j):
                assert row[S.triples.index((i, j, k))] == 3
        p2 = sum(x * x for x in S.p)
        assert all(sum(x * y for x, y in zip(a, S.p)) == p2 for a in S.alphas)
        assert system_consistent(S), alg.name


def test_mutual_exclusion_on_catalog():
    for alg in catalog_all():
        if not alg.support():
            continue
        S = S_of(alg)
        cert = decide_einstein(S)
        assert verify_certificate(S, cert)
        t, _ = interior_lp(S)
        if cert.verdict == YES:
            assert separator_lp(S) is None, alg.name
        else:
            assert t <= 0, alg.name


def test_certificate_text_roundtrip():
    for alg in (catalog.m0(4), catalog.m2(8), catalog.b12("+")):
        cert = decide_einstein(S_of(alg))
        text = format_certificate(cert)
        assert parse_certificate(text) == cert
        assert format_certificate(parse_certificate(text)) == text


def test_parse_certificate_errors():
    with pytest.raises(CertificateError):
        parse_certificate("verdict YES\nv 1\nv 2\norder 1,2,3\n")
    with pytest.raises(CertificateError):
        parse_certificate("verdict YES\nv 1\norder 1,2\n")
    with pytest.raises(CertificateError):
        parse_certificate("v 1\norder 1,2,3\n")


def test_convex_combination_checker():
    S = S_of(catalog.m0(4))
    assert verify_convex_combination(S, [F(1, 2), F(1, 2)])
    assert not verify_convex_combination(S, [F(1, 3), F(2, 3)])
    with pytest.raises(CertificateError):
        verify_convex_combination(S, [1])


@st.composite
def graded_supports(draw):
    n = draw(st.integers(4, 9))
    cand = [(i, j, i + j) for i in range(1, n) for j in range(i + 1, n + 1) if i + j <= n]
    picked = draw(st.lists(st.sampled_from(cand), min_size=1, max_size=len(cand), unique=True))
    return n, picked


@settings(max_examples=150, deadline=None)
@given(graded_supports())
def test_verdict_matches_float_lp(data):
    from scipy.optimize import linprog

    n, support = data
    S = AlphaSystem.from_support(n, support)
    cert = decide_einstein(S)
    assert verify_certificate(S, cert)
    # float oracle: max t s.t. U v = 1, v_j - t >= 0, t <= 1
    N = S.N
    c = np.zeros(N + 1)
    c[-1] = -1
    A_eq = np.hstack([np.array(S.U, dtype=float), np.zeros((N, 1))])
    A_ub = np.hstack([-np.eye(N), np.ones((N, 1))])
    res = linprog(c, A_ub=A_ub, b_ub=np.zeros(N), A_eq=A_eq, b_eq=np.ones(N),
                  bounds=[(None, None)] * N + [(None, 1)], method="highs")
    assert res.status == 0
    t_float = -res.fun
    if cert.verdict == YES:
        assert t_float > 1e-9
    else:
        assert t_float < 1e-7
