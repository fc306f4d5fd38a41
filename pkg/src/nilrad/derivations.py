"""Derivation algebra, diagonal pre-Einstein derivation, eigenvalue type.

A derivation is stored as an n x n matrix ``M`` acting on column vectors,
so ``M[a][b]`` is the coefficient of e_{a+1} in D(e_{b+1}).
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .errors import NilradError, NotTorusAdaptedError, UnderdeterminedError
from .lie_core import LieAlgebra
from .linalg import echelon, nullspace, solve
from .scalar import Scalar


@dataclass(frozen=True)
class Derivation:
    matrix: tuple[tuple, ...]

    @property
    def n(self) -> int:
        return len(self.matrix)

    def diagonal(self) -> tuple:
        return tuple(self.matrix[i][i] for i in range(self.n))

    def trace(self):
        return sum(self.diagonal(), Fraction(0))

    def column(self, b: int) -> dict[int, object]:
        """D(e_b) as a sparse 1-based vector."""
        return {a + 1: self.matrix[a][b - 1] for a in range(self.n) if self.matrix[a][b - 1]}


@dataclass(frozen=True)
class DerivationSpace:
    algebra: LieAlgebra
    basis: tuple[Derivation, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)


def leibniz_rows(alg: LieAlgebra) -> list[dict[int, object]]:
    """Sparse rows of the Leibniz system; unknown D[a][b] sits in column a*n + b (0-based)."""
    n = alg.dim
    t = alg.table()
    # into[(k, y)] = [(x, C_xy^k)] over the full antisymmetric table
    into: dict[tuple[int, int], list] = defaultdict(list)
    for (x, y), vec in t.items():
        for k, c in vec.items():
            into[(k, y)].append((x, c))

    def col(a: int, b: int) -> int:
        return (a - 1) * n + (b - 1)

    rows = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for k in range(1, n + 1):
                row: dict[int, object] = {}

                def acc(c_idx: int, v) -> None:
                    nv = row.get(c_idx, 0) + v
                    if nv:
                        row[c_idx] = nv
                    else:
                        row.pop(c_idx, None)

                # D[e_i, e_j]
                for l, c in t.get((i, j), {}).items():
                    acc(col(k, l), c)
                # [D e_i, e_j]
                for l, c in into.get((k, j), ()):
                    acc(col(l, i), -c)
                # [e_i, D e_j]; C_il^k = -C_li^k
                for l, c in into.get((k, i), ()):
                    acc(col(l, j), c)
                if row:
                    rows.append(row)
    return rows


def is_derivation(alg: LieAlgebra, matrix: Sequence[Sequence]) -> bool:
    """Direct check of D[e_i, e_j] = [D e_i, e_j] + [e_i, D e_j] for all i < j."""
    n = alg.dim
    t = alg.table()
    D = Derivation(tuple(tuple(r) for r in matrix))

    def apply(vec: dict) -> dict:
        out: dict[int, object] = {}
        for b, x in vec.items():
            for a, m in D.column(b).items():
                out[a] = out.get(a, 0) + m * x
        return {a: v for a, v in out.items() if v}

    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            lhs = apply(t.get((i, j), {}))
            r1 = alg.bracket_vectors(D.column(i), {j: 1}, t)
            r2 = alg.bracket_vectors({i: 1}, D.column(j), t)
            rhs = dict(r1)
            for k, v in r2.items():
                rhs[k] = rhs.get(k, 0) + v
            keys = set(lhs) | set(rhs)
            if any(lhs.get(k, 0) - rhs.get(k, 0) for k in keys):
                return False
    return True


def derivation_space(alg: LieAlgebra) -> DerivationSpace:
    n = alg.dim
    vecs = nullspace(leibniz_rows(alg), n * n, alg.zero, alg.one)
    basis = tuple(
        Derivation(tuple(tuple(v[a * n : (a + 1) * n]) for a in range(n))) for v in vecs
    )
    return DerivationSpace(alg, basis)


@dataclass(frozen=True)
class EigenType:
    values: tuple[int, ...]
    multiplicities: tuple[int, ...]

    @property
    def simple(self) -> bool:
        return all(m == 1 for m in self.multiplicities)

    def __str__(self) -> str:
        vals = "<".join(str(v) for v in self.values)
        mults = ",".join(str(m) for m in self.multiplicities)
        return f"({vals}; {mults})"


@dataclass(frozen=True)
class PreEinstein:
    diag: tuple[Fraction, ...]
    simple: bool
    eigen_type: EigenType | None


def _rational(x) -> Fraction:
    if isinstance(x, Scalar):
        if not x.is_rational:
            raise NilradError(f"pre-Einstein entry {x} is irrational")
        return x.a
    return Fraction(x)


def eigenvalue_type(diag: Sequence[Fraction] | PreEinstein) -> EigenType:
    """Distinct eigenvalues scaled to coprime naturals, with multiplicities."""
    if isinstance(diag, PreEinstein):
        diag = diag.diag
    if any(x <= 0 for x in diag):
        raise NilradError("eigenvalue type needs all eigenvalues positive")
    distinct = sorted(set(diag))
    den = lcm(*(x.denominator for x in distinct))
    ints = [int(x * den) for x in distinct]
    g = gcd(*ints)
    return EigenType(tuple(v // g for v in ints), tuple(diag.count(x) for x in distinct))


def pre_einstein(alg: LieAlgebra, der: DerivationSpace | None = None) -> PreEinstein:
    """Unique diagonal phi with phi a derivation and Tr(phi psi) = Tr psi for all psi in Der."""
    if der is None:
        der = derivation_space(alg)
    n = alg.dim
    rows: list[dict] = []
    rhs: list = []
    for i, j, k in alg.support():
        r = {i - 1: 1, j - 1: 1}
        r[k - 1] = r.get(k - 1, 0) - 1
        rows.append({c: v for c, v in r.items() if v})
        rhs.append(0)
    for psi in der.basis:
        d = psi.diagonal()
        rows.append({i: x for i, x in enumerate(d) if x})
        rhs.append(sum(d, alg.zero))
    sol = solve(rows, rhs, n, alg.zero)
    if sol is None:
        raise NotTorusAdaptedError()
    x, nullity = sol
    if nullity:
        raise UnderdeterminedError(nullity)
    phi = tuple(_rational(v) for v in x)
    # re-verify against the full basis, not just the rows kept by elimination
    for i, j, k in alg.support():
        if phi[i - 1] + phi[j - 1] != phi[k - 1]:
            raise NilradError("pre-Einstein solve produced a non-derivation")
    for psi in der.basis:
        d = psi.diagonal()
        if sum((p * x for p, x in zip(phi, d)), alg.zero) != sum(d, alg.zero):
            raise NilradError("pre-Einstein solve violates a trace condition")
    simple = len(set(phi)) == n
    etype = eigenvalue_type(phi) if all(p > 0 for p in phi) else None
    return PreEinstein(phi, simple, etype)


@dataclass(frozen=True)
class NecessaryReport:
    phi_positive: bool
    ad_phi_nonneg: bool
    weights: tuple[Fraction, ...]
    weight_dims: tuple[tuple[Fraction, int], ...]

    @property
    def ok(self) -> bool:
        return self.phi_positive and self.ad_phi_nonneg


def necessary_condition(alg: LieAlgebra, phi: PreEinstein) -> NecessaryReport:
    """phi > 0 and ad_phi >= 0 on Der, via the phi-weight decomposition of Der."""
    n = alg.dim
    d = phi.diag
    weight_of = [d[c // n] - d[c % n] for c in range(n * n)]
    groups: dict[Fraction, list[dict]] = defaultdict(list)
    cells: dict[Fraction, int] = defaultdict(int)
    for c in range(n * n):
        cells[weight_of[c]] += 1
    for row in leibniz_rows(alg):
        w = weight_of[next(iter(row))]
        # rows never mix weights because phi is a derivation
        assert all(weight_of[c] == w for c in row)
        groups[w].append(row)
    dims = []
    for w in sorted(cells):
        k = cells[w] - echelon(groups.get(w, [])).rank
        if k:
            dims.append((w, k))
    weights = tuple(w for w, _ in dims)
    return NecessaryReport(
        phi_positive=all(x > 0 for x in d),
        ad_phi_nonneg=all(w >= 0 for w in weights),
        weights=weights,
        weight_dims=tuple(dims),
    )
