"""Shared algebra lists for the test modules."""

from __future__ import annotations

from fractions import Fraction as F
from functools import lru_cache

from nilrad import catalog
from nilrad.cli import run_check

SAMPLES = (F(-2), F(-1), F(0), F(1, 2), F(-1, 4), F(1), F(3), F(-1, 3))


def g_alpha_all(dims=range(7, 12)):
    out = []
    for n in dims:
        for a in SAMPLES:
            try:
                out.append(catalog.g_alpha(n, a))
            except catalog.CatalogError:
                pass
        if n == 7:
            out.append(catalog.g_alpha(7, F(-5, 2)))
        if n == 9:
            out.append(catalog.g_alpha(9, F(-3)))
        if n == 11:
            out += [catalog.g_alpha(11, r) for r in catalog.SQRT10_ROOTS.values()]
    return out


def a2_algebras(dims=range(7, 12)):
    """Graded filiform algebras with eigenvalue type (1 < 2 < ... < n)."""
    out = []
    for n in dims:
        out += [catalog.m2(n), catalog.witt(n)]
        if n % 2 == 1:
            out.append(catalog.m01(n))
        if n % 2 == 0 and n >= 8:
            out.append(catalog.m02(n))
        if n % 2 == 1 and n >= 9:
            out.append(catalog.m03(n))
    return out + g_alpha_all(dims)


def b2_algebras():
    return [catalog.b6(), catalog.b8(), catalog.b1_10(), catalog.b2_10(),
            catalog.b12("+"), catalog.b12("-")]


def catalog_all():
    out = [catalog.m0(n) for n in range(3, 13)]
    out += [catalog.m1(n) for n in range(4, 13, 2)]
    out += [catalog.witt(n) for n in range(4, 13)]
    out += [catalog.m2(n) for n in range(5, 13)]
    out += a2_algebras() + b2_algebras()
    out += [catalog.nt8(t) for t in (2, -1, F(1, 2))]
    out += [catalog.two_step(p) for p in (1, 2, 3)] + [catalog.two_step_10()]
    out += [catalog.heisenberg(n) for n in (3, 5, 7)]
    return out


@lru_cache(maxsize=None)
def yes_algebras(max_dim: int = 12):
    return tuple(
        a for a in catalog_all()
        if a.dim <= max_dim and run_check(a)[0].verdict == "YES"
    )
