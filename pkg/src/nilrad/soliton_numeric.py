"""Floating-point moment map, Ricci curvature and nilsoliton recovery.

The diagonal group acts by C_ij^k -> exp(x_i + x_j - x_k) C_ij^k. Its moment
map at the rescaled bracket is the barycenter of the root vectors with
masses (C~_ij^k)^2. Minimizing the squared norm of that barycenter over x
finds a nilsoliton exactly when the exact criterion says YES; for NO
algebras the infimum is approached only as x runs off to infinity.

Everything here is corroborative. Verdicts come from :mod:`convex_cert`.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, Sequence

import numpy as np

from . import _kernels
from .convex_cert import AlphaSystem, alpha_set
from .derivations import PreEinstein, pre_einstein
from .errors import NilradError
from .lie_core import LieAlgebra, Triple


@dataclass(frozen=True)
class NumericState:
    x: tuple[float, ...]
    scaled_c: dict[Triple, float]
    masses: dict[Triple, float]


@dataclass(frozen=True)
class SolitonReport:
    converged: bool
    x_final: tuple[float, ...]
    ric: tuple[float, ...]
    c_fit: float
    beta_fit: float
    residual: float
    iterations: int = 0
    objective: float = math.nan
    grad_norm: float = math.nan
    reason: str = ""
    type_scale: float = 1.0
    trace: list[tuple[int, float, float]] = field(default_factory=list, repr=False, compare=False)

    @property
    def beta_type(self) -> float:
        """beta_fit against the eigenvalue type scaled to coprime naturals."""
        return self.beta_fit / self.type_scale

    def lines(self) -> list[str]:
        fmt = lambda v: " ".join(f"{t:.12g}" for t in v)  # noqa: E731
        return [
            f"converged {str(self.converged).lower()}",
            f"reason {self.reason}",
            f"iterations {self.iterations}",
            f"objective {self.objective:.16g}",
            f"grad_norm {self.grad_norm:.3e}",
            f"x_final {fmt(self.x_final)}",
            f"ric {fmt(self.ric)}",
            f"c_fit {self.c_fit:.12g}",
            f"beta_fit {self.beta_fit:.12g}",
            f"beta_type {self.beta_type:.12g}",
            f"residual {self.residual:.3e}",
        ]


def _coeffs(alg: LieAlgebra) -> dict[Triple, float]:
    return {t: float(v) for t, v in alg.brackets.items()}


def numeric_state(alg: LieAlgebra, x: Sequence[float]) -> NumericState:
    x = tuple(float(t) for t in x)
    sc = {
        (i, j, k): c * math.exp(x[i - 1] + x[j - 1] - x[k - 1])
        for (i, j, k), c in _coeffs(alg).items()
    }
    return NumericState(x, sc, {t: c * c for t, c in sc.items()})


def moment_image(S: AlphaSystem, masses: Mapping[Triple, float] | Sequence[float]) -> np.ndarray:
    """Barycenter sum(w alpha) / sum(w) of the root vectors."""
    if S.N == 0:
        raise NilradError("empty root set")
    if isinstance(masses, Mapping):
        w = np.array([masses[t] for t in S.triples], dtype=float)
    else:
        w = np.asarray(masses, dtype=float)
    if w.shape != (S.N,):
        raise NilradError(f"expected {S.N} masses, got {w.shape}")
    if np.any(w <= 0):
        raise NilradError("masses must be positive")
    Y = np.array(S.alphas, dtype=float)
    return (w @ Y) / w.sum()


def ricci_diagonal(alg: LieAlgebra, x: Sequence[float] | None = None) -> np.ndarray:
    """Diagonal of the Ricci operator of the rescaled bracket, orthonormal basis.

    Ric_mm = -1/2 sum_{i,k} (C_mi^k)^2 + 1/4 sum_{i,j} (C_ij^m)^2 over the full
    antisymmetric tensor.
    """
    n = alg.dim
    if x is None:
        x = [0.0] * n
    C = np.zeros((n, n, n))
    for (i, j, k), c in numeric_state(alg, x).scaled_c.items():
        C[i - 1, j - 1, k - 1] = c
        C[j - 1, i - 1, k - 1] = -c
    sq = C * C
    return -0.5 * sq.sum(axis=(1, 2)) + 0.25 * sq.sum(axis=(0, 1))


def bracket_norm_sq(alg: LieAlgebra, x: Sequence[float] | None = None) -> float:
    """|mu|^2 = sum over ordered pairs, i.e. twice the sum over i < j."""
    if x is None:
        return 2.0 * sum(c * c for c in _coeffs(alg).values())
    return 2.0 * sum(numeric_state(alg, x).masses.values())


def fit_soliton(ric: Sequence[float], phi: Sequence[float]) -> tuple[float, float, float]:
    """Least-squares (c, beta) with ric ~ c 1 + beta phi, and the l2 residual."""
    ric = np.asarray(ric, dtype=float)
    A = np.column_stack([np.ones(len(ric)), np.asarray(phi, dtype=float)])
    (c, beta), *_ = np.linalg.lstsq(A, ric, rcond=None)
    return float(c), float(beta), float(np.linalg.norm(ric - A @ np.array([c, beta])))


class _Objective:
    """F(x) = |b(x)|^2 evaluated as |p|^2 + |b(x) - p|^2.

    b - p is orthogonal to p, so the split is exact; working with the
    shifted roots keeps full relative precision as b approaches p.
    """

    def __init__(self, alg: LieAlgebra, S: AlphaSystem) -> None:
        coeffs = _coeffs(alg)
        self.p = np.array([float(t) for t in S.p])
        self.p2 = float(self.p @ self.p)
        self.alphas = np.array(S.alphas, dtype=float)
        self.beta = np.ascontiguousarray(self.alphas - self.p)
        self.logw0 = np.array([2.0 * math.log(abs(coeffs[t])) for t in S.triples])
        self.evals = 0

    def __call__(self, x: np.ndarray):
        """(|b - p|^2, grad F, b - p); the gradient of F and of |b - p|^2 agree."""
        self.evals += 1
        f, g, d = _kernels.objective(self.beta, self.logw0, np.ascontiguousarray(x, dtype=float))
        return f, np.asarray(g), np.asarray(d)

    def gap(self, d: np.ndarray) -> float:
        """max_j |(alpha_j, b) - |b|^2|, zero exactly at the projection point."""
        return float(np.max(np.abs(self.beta @ d - d @ d)))


def minimize_moment_norm(
    alg: LieAlgebra,
    S: AlphaSystem | None = None,
    phi: PreEinstein | None = None,
    *,
    max_iter: int = 100_000,
    tol: float = 1e-13,
    gap_tol: float = 1e-12,
    bound: float = 50.0,
    x0: Sequence[float] | None = None,
    record_trace: bool = False,
) -> SolitonReport:
    """Descend F(x) = |moment_image(x)|^2 over the diagonal group.

    Steps are Barzilai-Borwein guesses cut back by Armijo backtracking, so F
    never increases on accepted steps. Convergence needs both a small
    gradient and b(x) at the projection point; a small gradient alone also
    happens far out along a degenerating orbit.
    """
    if phi is None:
        phi = pre_einstein(alg)
    if any(t <= 0 for t in phi.diag):
        raise NilradError("descent needs a positive pre-Einstein derivation")
    if S is None:
        S = alpha_set(alg)
    obj = _Objective(alg, S)
    n = alg.dim
    x = np.zeros(n) if x0 is None else np.array(x0, dtype=float)
    F, g, d = obj(x)  # F holds |b - p|^2 = |b|^2 - |p|^2 from here on
    step = 1.0
    trace: list[tuple[int, float, float]] = []
    reason = "max_iter"
    converged = False
    it = 0
    for it in range(max_iter + 1):
        gn = float(np.linalg.norm(g))
        if record_trace:
            trace.append((it, obj.p2 + F, gn))
        if gn < tol and obj.gap(d) < gap_tol:
            converged, reason = True, "converged"
            break
        if np.max(np.abs(x)) > bound:
            reason = "diverged"
            break
        if it == max_iter:
            break
        t = step
        while True:
            xn = x - t * g
            Fn, gn_new, dn = obj(xn)
            if Fn <= F - 1e-4 * t * gn * gn:
                break
            t *= 0.5
            if t < 1e-30:
                break
        if t < 1e-30:
            reason = "stalled"
            break
        s = xn - x
        y = gn_new - g
        sy = float(s @ y)
        step = float(s @ s) / sy if sy > 0 else 2.0 * t
        step = min(max(step, 1e-12), 1e6)
        x, F, g, d = xn, Fn, gn_new, dn

    # gauge: x -> x + s 1 rescales every constant by e^s; restore the input norm
    norm0 = bracket_norm_sq(alg)
    shift = 0.5 * math.log(norm0 / bracket_norm_sq(alg, x))
    x = x + shift
    ric = ricci_diagonal(alg, x)
    phi_f = [float(t) for t in phi.diag]
    c, beta, res = fit_soliton(ric, phi_f)
    scale = 1.0
    if phi.eigen_type is not None:
        scale = phi.eigen_type.values[0] / min(phi_f)
    return SolitonReport(
        converged=converged,
        x_final=tuple(float(t) for t in x),
        ric=tuple(float(t) for t in ric),
        c_fit=c,
        beta_fit=beta,
        residual=res,
        iterations=it,
        objective=obj.p2 + F,
        grad_norm=float(np.linalg.norm(g)),
        reason=reason,
        type_scale=scale,
        trace=trace,
    )


def write_trace(report: SolitonReport, path: str | Path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["iteration", "F", "grad_norm"])
        for row in report.trace:
            w.writerow([row[0], f"{row[1]:.17g}", f"{row[2]:.6e}"])


def analytic_gradient(alg: LieAlgebra, x: Sequence[float], S: AlphaSystem | None = None) -> np.ndarray:
    S = S or alpha_set(alg)
    return _Objective(alg, S)(np.asarray(x, dtype=float))[1]


def objective_value(alg: LieAlgebra, x: Sequence[float], S: AlphaSystem | None = None) -> float:
    """|moment_image|^2 straight from the barycenter formula."""
    S = S or alpha_set(alg)
    b = moment_image(S, numeric_state(alg, x).masses)
    return float(b @ b)


def finite_diff_gradient_check(
    alg: LieAlgebra, x: Sequence[float], h: float = 1e-6, S: AlphaSystem | None = None
) -> float:
    """Max deviation between the analytic gradient and central differences.

    The error is relative to max(1, |grad|_inf) so critical points, where
    both sides vanish, do not divide by zero.
    """
    S = S or alpha_set(alg)
    x = np.asarray(x, dtype=float)
    g = analytic_gradient(alg, x, S)
    fd = np.empty_like(x)
    for r in range(len(x)):
        e = np.zeros_like(x)
        e[r] = h
        fd[r] = (objective_value(alg, x + e, S) - objective_value(alg, x - e, S)) / (2 * h)
    return float(np.max(np.abs(g - fd)) / max(1.0, float(np.max(np.abs(g)))))
