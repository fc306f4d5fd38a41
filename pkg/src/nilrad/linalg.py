"""Sparse exact row reduction over Q or Q(sqrt d).

Rows are dicts ``{column: value}`` with nonzero values only. Values are
``Fraction`` or :class:`~nilrad.scalar.Scalar`; anything supporting field
arithmetic and truthiness-as-nonzero works.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

SparseRow = dict


class Echelon:
    """Incrementally maintained reduced row echelon form."""

    def __init__(self) -> None:
        self.pivots: dict[int, SparseRow] = {}

    def reduce(self, row: SparseRow) -> SparseRow:
        r = {c: v for c, v in row.items() if v}
        for c in [c for c in r if c in self.pivots]:
            f = r.get(c)
            if not f:
                continue
            for cc, vv in self.pivots[c].items():
                nv = r.get(cc, 0) - f * vv
                if nv:
                    r[cc] = nv
                else:
                    r.pop(cc, None)
        return r

    def add(self, row: SparseRow) -> int | None:
        """Insert a row; return its new pivot column, or None if dependent."""
        r = self.reduce(row)
        if not r:
            return None
        p = min(r)
        inv = Fraction(1) / r[p]
        r = {c: v * inv for c, v in r.items()}
        for prow in self.pivots.values():
            f = prow.get(p)
            if f:
                for cc, vv in r.items():
                    nv = prow.get(cc, 0) - f * vv
                    if nv:
                        prow[cc] = nv
                    else:
                        prow.pop(cc, None)
        self.pivots[p] = r
        return p

    @property
    def rank(self) -> int:
        return len(self.pivots)


def echelon(rows: Iterable[SparseRow]) -> Echelon:
    e = Echelon()
    for r in rows:
        e.add(r)
    return e


def nullspace(rows: Iterable[SparseRow], ncols: int, zero=Fraction(0), one=Fraction(1)) -> list[list]:
    """Basis of {x : row . x = 0 for all rows}, one vector per free column."""
    e = echelon(rows)
    basis = []
    for free in range(ncols):
        if free in e.pivots:
            continue
        x = [zero] * ncols
        x[free] = one
        for p, r in e.pivots.items():
            v = r.get(free)
            if v:
                x[p] = -v
        basis.append(x)
    return basis


def solve(rows: Sequence[SparseRow], rhs: Sequence, ncols: int, zero=Fraction(0)):
    """One solution of the sparse system (free variables set to zero).

    Returns ``(x, nullity)`` or ``None`` when the system is inconsistent.
    """
    e = Echelon()
    for r, b in zip(rows, rhs):
        aug = dict(r)
        if b:
            aug[ncols] = b
        e.add(aug)
    if ncols in e.pivots:
        return None
    x = [zero] * ncols
    for p, r in e.pivots.items():
        v = r.get(ncols)
        if v:
            x[p] = v
    return x, ncols - e.rank


def dense_rows(matrix: Sequence[Sequence]) -> list[SparseRow]:
    return [{j: v for j, v in enumerate(row) if v} for row in matrix]


def rank(matrix: Sequence[Sequence]) -> int:
    return echelon(dense_rows(matrix)).rank
