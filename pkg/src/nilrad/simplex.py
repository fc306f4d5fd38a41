"""Exact rational two-phase simplex with Bland's rule.

Solves ``min c.x  s.t.  A x = b, x >= 0`` over ``Fraction``. Bland's
smallest-index rule makes termination unconditional, so no cycling
safeguards or tolerances are needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    x: tuple[Fraction, ...] | None = None
    value: Fraction | None = None
    pivots: int = 0


class _Tableau:
    def __init__(self, rows: list[list[Fraction]], rhs: list[Fraction], basis: list[int]) -> None:
        self.T = rows
        self.rhs = rhs
        self.basis = basis
        self.pivots = 0

    def pivot(self, i: int, j: int) -> None:
        T, rhs = self.T, self.rhs
        piv = T[i][j]
        if piv != 1:
            T[i] = [v / piv for v in T[i]]
            rhs[i] /= piv
        row_i = T[i]
        nz = [c for c, v in enumerate(row_i) if v]
        for k in range(len(T)):
            if k == i:
                continue
            f = T[k][j]
            if f:
                row_k = T[k]
                for c in nz:
                    row_k[c] -= f * row_i[c]
                rhs[k] -= f * rhs[i]
        self.basis[i] = j
        self.pivots += 1

    def reduced_costs(self, cost: Sequence[Fraction]) -> list[Fraction]:
        r = list(cost)
        for i, b in enumerate(self.basis):
            cb = cost[b]
            if cb:
                for c, v in enumerate(self.T[i]):
                    if v:
                        r[c] -= cb * v
        return r

    def run(self, cost: Sequence[Fraction], allowed: int) -> str:
        """Optimize over columns < ``allowed``; returns 'optimal' or 'unbounded'."""
        while True:
            r = self.reduced_costs(cost)
            enter = next((j for j in range(allowed) if r[j] < 0), None)
            if enter is None:
                return "optimal"
            best = None
            for i, row in enumerate(self.T):
                a = row[enter]
                if a > 0:
                    key = (self.rhs[i] / a, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return "unbounded"
            self.pivot(best[1], enter)


def linprog_exact(
    c: Sequence, A_eq: Sequence[Sequence], b_eq: Sequence
) -> LPResult:
    """Minimize ``c.x`` subject to ``A_eq x = b_eq`` and ``x >= 0``, exactly."""
    n = len(c)
    m = len(A_eq)
    rows = []
    rhs = []
    for i in range(m):
        row = [Fraction(v) for v in A_eq[i]]
        b = Fraction(b_eq[i])
        if b < 0:
            row = [-v for v in row]
            b = -b
        row.extend(Fraction(int(k == i)) for k in range(m))
        rows.append(row)
        rhs.append(b)
    tab = _Tableau(rows, rhs, [n + i for i in range(m)])

    phase1 = [Fraction(0)] * n + [Fraction(1)] * m
    tab.run(phase1, n + m)
    if sum(tab.rhs[i] for i, b in enumerate(tab.basis) if b >= n) > 0:
        return LPResult("infeasible", pivots=tab.pivots)

    # drive zero-level artificials out of the basis; drop redundant rows
    i = 0
    while i < len(tab.T):
        if tab.basis[i] >= n:
            j = next((j for j in range(n) if tab.T[i][j]), None)
            if j is None:
                del tab.T[i], tab.rhs[i], tab.basis[i]
                continue
            tab.pivot(i, j)
        i += 1

    cost = [Fraction(v) for v in c] + [Fraction(0)] * m
    status = tab.run(cost, n)
    if status == "unbounded":
        return LPResult("unbounded", pivots=tab.pivots)
    x = [Fraction(0)] * n
    for i, b in enumerate(tab.basis):
        x[b] = tab.rhs[i]
    value = sum((Fraction(ci) * xi for ci, xi in zip(c, x)), Fraction(0))
    return LPResult("optimal", tuple(x), value, tab.pivots)
