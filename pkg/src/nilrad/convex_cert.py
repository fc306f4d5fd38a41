"""Root-vector system of a graded nilpotent algebra and exact interiority certificates.

For each nonzero C_ij^k the root vector is f_i + f_j - f_k. The algebra is an
Einstein nilradical (simple pre-Einstein spectrum) iff the point ``p`` of the
affine span of the roots closest to the origin lies in the relative interior
of their convex hull; equivalently ``U v = 1`` has a strictly positive
solution, where ``U`` is the Gram matrix of the roots.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .derivations import PreEinstein
from .errors import CertificateError, NilradError, NotApplicableError
from .lie_core import LieAlgebra, Triple
from .linalg import rank, solve
from .simplex import linprog_exact

YES = "YES"
NO = "NO"


def _dot(u: Sequence, v: Sequence) -> Fraction:
    return sum((x * y for x, y in zip(u, v)), Fraction(0))


@dataclass(frozen=True)
class AlphaSystem:
    n: int
    triples: tuple[Triple, ...]
    alphas: tuple[tuple[int, ...], ...]
    U: tuple[tuple[int, ...], ...]
    p: tuple[Fraction, ...]

    @property
    def N(self) -> int:
        return len(self.triples)

    @property
    def Y(self) -> tuple[tuple[int, ...], ...]:
        """n x N matrix whose columns are the root vectors."""
        return tuple(tuple(a[r] for a in self.alphas) for r in range(self.n))

    @classmethod
    def from_support(cls, n: int, triples: Iterable[Triple]) -> AlphaSystem:
        trip = tuple(sorted(set(triples)))
        if not trip:
            raise NotApplicableError("no roots: the algebra is abelian")
        alphas = []
        for i, j, k in trip:
            if not (1 <= i < j <= n and 1 <= k <= n):
                raise ValueError(f"bad triple {(i, j, k)} for n={n}")
            a = [0] * n
            a[i - 1] += 1
            a[j - 1] += 1
            a[k - 1] -= 1
            alphas.append(tuple(a))
        U = tuple(tuple(sum(x * y for x, y in zip(a, b)) for b in alphas) for a in alphas)
        return cls(n, trip, tuple(alphas), U, _projection(alphas, U))

    def pairings(self, a: Sequence) -> tuple[Fraction, ...]:
        """Y^t a."""
        return tuple(_dot(al, a) for al in self.alphas)

    def combination(self, coeffs: Sequence) -> tuple[Fraction, ...]:
        """Y c."""
        out = [Fraction(0)] * self.n
        for c, al in zip(coeffs, self.alphas):
            if c:
                for r, x in enumerate(al):
                    if x:
                        out[r] += c * x
        return tuple(out)


def _projection(alphas: Sequence[Sequence[int]], U) -> tuple[Fraction, ...]:
    # min |Y w|^2 subject to sum(w) = 1:  U w = lam * 1, 1.w = 1
    N = len(alphas)
    rows = []
    for r in range(N):
        row = {c: Fraction(U[r][c]) for c in range(N) if U[r][c]}
        row[N] = Fraction(-1)
        rows.append(row)
    rows.append({c: Fraction(1) for c in range(N)})
    sol = solve(rows, [0] * N + [1], N + 1)
    if sol is None:
        raise NilradError("normal equations for the projection are inconsistent")
    w = sol[0][:N]
    n = len(alphas[0])
    return tuple(sum((w[j] * alphas[j][r] for j in range(N)), Fraction(0)) for r in range(n))


def alpha_set(alg: LieAlgebra, phi: PreEinstein | None = None) -> AlphaSystem:
    """Root system from the bracket support; coefficient values are irrelevant.

    When ``phi`` is given, the simple-spectrum and positivity preconditions
    of the criterion are enforced.
    """
    if phi is not None:
        if not phi.simple:
            raise NotApplicableError("Theorem 1 inapplicable: pre-Einstein spectrum not simple")
        if not all(x > 0 for x in phi.diag):
            raise NotApplicableError("pre-Einstein derivation is not positive")
    return AlphaSystem.from_support(alg.dim, alg.support())


def solution_polytope_dim(S: AlphaSystem) -> int:
    """Affine dimension of {v : U v = 1}."""
    return S.N - rank(S.U)


def system_consistent(S: AlphaSystem) -> bool:
    """Rank test rank[U | 1] == rank U."""
    return rank([list(r) + [1] for r in S.U]) == rank(S.U)


# -- certificates -------------------------------------------------------------


@dataclass(frozen=True)
class Certificate:
    verdict: str
    order: tuple[Triple, ...]
    v: tuple[Fraction, ...] | None = None
    a: tuple[Fraction, ...] | None = None

    def __post_init__(self) -> None:
        if self.verdict == YES and (self.v is None or self.a is not None):
            raise CertificateError("YES certificate needs v and no a")
        if self.verdict == NO and (self.a is None or self.v is not None):
            raise CertificateError("NO certificate needs a and no v")
        if self.verdict not in (YES, NO):
            raise CertificateError(f"unknown verdict {self.verdict!r}")


def interior_lp(S: AlphaSystem) -> tuple[Fraction, tuple[Fraction, ...]]:
    """Maximize t subject to U v = 1, v_j >= t, t <= 1; returns (t*, v)."""
    N = S.N
    # v = s + (1 - u) 1 with s, u >= 0  ->  U s - (U 1) u = 1 - U 1 ; min u
    row_sums = [sum(r) for r in S.U]
    A = [list(S.U[r]) + [-row_sums[r]] for r in range(N)]
    b = [1 - row_sums[r] for r in range(N)]
    c = [0] * N + [1]
    res = linprog_exact(c, A, b)
    if res.status != "optimal":
        raise NilradError(f"U v = 1 is inconsistent (LP status {res.status})")
    u = res.x[N]
    t = 1 - u
    return t, tuple(s + t for s in res.x[:N])


def _primitive(vec: Sequence[Fraction]) -> tuple[Fraction, ...]:
    den = lcm(*(x.denominator for x in vec))
    ints = [int(x * den) for x in vec]
    g = gcd(*ints) or 1
    return tuple(Fraction(x // g) for x in ints)


def separator_lp(S: AlphaSystem) -> tuple[Fraction, ...] | None:
    """A vector a with Y^t a >= 0, Y^t a != 0 and (a, p) <= 0, strict when possible.

    Returns None when no such vector exists, i.e. p is in the relative interior.
    """
    n, N = S.n, S.N
    # variables: a+ (n), a- (n), g (N) = Y^t a, h (N) = 1 - g
    nv = 2 * n + 2 * N
    A = []
    b = []
    for j, al in enumerate(S.alphas):
        row = [0] * nv
        for r in range(n):
            row[r] = al[r]
            row[n + r] = -al[r]
        row[2 * n + j] = -1
        A.append(row)
        b.append(0)
        row = [0] * nv
        row[2 * n + j] = 1
        row[2 * n + N + j] = 1
        A.append(row)
        b.append(1)
    cost = [0] * nv
    for r in range(n):
        cost[r] = S.p[r]
        cost[n + r] = -S.p[r]
    res = linprog_exact(cost, A, b)
    if res.status != "optimal":
        raise NilradError(f"separation LP failed: {res.status}")
    if res.value < 0:
        x = res.x
        return _primitive([x[r] - x[n + r] for r in range(n)])
    # (a, p) >= 0 everywhere: look for a proper supporting hyperplane through p
    row = [0] * (nv + 1)
    for r in range(n):
        row[r] = S.p[r]
        row[n + r] = -S.p[r]
    row[nv] = 1
    A2 = [r + [0] for r in A] + [row]
    b2 = b + [0]
    cost2 = [0] * (2 * n) + [-1] * N + [0] * N + [0]
    res = linprog_exact(cost2, A2, b2)
    if res.status != "optimal":
        raise NilradError(f"separation LP failed: {res.status}")
    if res.value < 0:
        x = res.x
        return _primitive([x[r] - x[n + r] for r in range(n)])
    return None


def decide_einstein(S: AlphaSystem) -> Certificate:
    """Exact verdict with a re-verified certificate."""
    t, v = interior_lp(S)
    if t > 0:
        cert = Certificate(YES, S.triples, v=v)
    else:
        a = separator_lp(S)
        if a is None:
            raise NilradError("interior LP says NO but no separating vector exists")
        cert = Certificate(NO, S.triples, a=a)
    if not verify_certificate(S, cert):
        raise NilradError("internal error: produced certificate fails verification")
    return cert


def verify_certificate(S: AlphaSystem, cert: Certificate) -> bool:
    """YES: v > 0 and U v = 1. NO: Y^t a >= 0, Y^t a != 0 and (a, p) <= 0."""
    if tuple(cert.order) != S.triples:
        raise CertificateError("certificate root order does not match the algebra")
    if cert.verdict == YES:
        if len(cert.v) != S.N:
            raise CertificateError(f"v has length {len(cert.v)}, expected {S.N}")
        if any(x <= 0 for x in cert.v):
            return False
        return all(_dot(row, cert.v) == 1 for row in S.U)
    if len(cert.a) != S.n:
        raise CertificateError(f"a has length {len(cert.a)}, expected {S.n}")
    pair = S.pairings(cert.a)
    if any(x < 0 for x in pair) or not any(pair):
        return False
    return _dot(cert.a, S.p) <= 0


def separation_gap(S: AlphaSystem, a: Sequence) -> Fraction:
    """(a, p); negative for a strict separating vector."""
    return _dot(a, S.p)


def verify_convex_combination(S: AlphaSystem, c: Sequence) -> bool:
    """c > 0, sum(c) = 1 and Y c = p."""
    if len(c) != S.N:
        raise CertificateError(f"coefficient vector has length {len(c)}, expected {S.N}")
    c = [Fraction(x) for x in c]
    return all(x > 0 for x in c) and sum(c) == 1 and S.combination(c) == S.p


# -- text serialization -------------------------------------------------------


def _q(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_certificate(cert: Certificate) -> str:
    vec = cert.v if cert.verdict == YES else cert.a
    key = "v" if cert.verdict == YES else "a"
    lines = [
        f"verdict {cert.verdict}",
        " ".join([key, *(_q(x) for x in vec)]),
        " ".join(["order", *(f"{i},{j},{k}" for i, j, k in cert.order)]),
    ]
    return "\n".join(lines) + "\n"


def parse_certificate(text: str) -> Certificate:
    fields: dict[str, list[str]] = {}
    for line in text.splitlines():
        parts = line.split()
        if not parts:
            continue
        if parts[0] in fields:
            raise CertificateError(f"duplicate {parts[0]!r} line")
        fields[parts[0]] = parts[1:]
    unknown = set(fields) - {"verdict", "v", "a", "order"}
    if unknown:
        raise CertificateError(f"unknown certificate lines {sorted(unknown)}")
    try:
        (verdict,) = fields["verdict"]
        order = tuple(tuple(int(x) for x in t.split(",")) for t in fields["order"])
        v = tuple(Fraction(x) for x in fields["v"]) if "v" in fields else None
        a = tuple(Fraction(x) for x in fields["a"]) if "a" in fields else None
    except (KeyError, ValueError) as exc:
        raise CertificateError(f"malformed certificate: {exc}") from None
    if any(len(t) != 3 for t in order):
        raise CertificateError("order entries must be i,j,k triples")
    return Certificate(verdict, order, v=v, a=a)
