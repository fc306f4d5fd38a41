"""Structure-constant model of a Lie algebra and its structural operations.

Basis indices are 1-based throughout the public API, matching the
usual ``e_1, ..., e_n`` notation. Only ``i < j`` brackets are stored.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from pathlib import Path
from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import AlgebraParseError, CocycleError, NormalFormError
from .linalg import Echelon, nullspace
from .scalar import Scalar, as_scalar, format_scalar, parse_scalar

Triple = tuple[int, int, int]


def _to_field(x: Scalar):
    # Fractions are much faster than Scalar for rational algebras
    return x.a if x.d == 1 else x


@dataclass(frozen=True, eq=False)
class LieAlgebra:
    dim: int
    brackets: Mapping[Triple, Scalar]
    field_d: int = 1
    name: str | None = None
    _values: Mapping = field(init=False, repr=False)

    def __post_init__(self) -> None:
        n = self.dim
        if n < 1:
            raise ValueError("dimension must be positive")
        clean = {}
        for key, c in self.brackets.items():
            i, j, k = key
            if not (1 <= i < j <= n and 1 <= k <= n):
                raise ValueError(f"bad bracket index {key} for dim {n}")
            c = as_scalar(c, self.field_d)
            if c.d not in (1, self.field_d):
                raise ValueError(f"coefficient {c} not in Q(sqrt {self.field_d})")
            if c:
                clean[(i, j, k)] = c if c.d == self.field_d else Scalar(c.a, 0, self.field_d)
        object.__setattr__(self, "brackets", MappingProxyType(dict(sorted(clean.items()))))
        object.__setattr__(
            self, "_values", MappingProxyType({t: _to_field(c) for t, c in self.brackets.items()})
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.dim == other.dim and dict(self.brackets) == dict(other.brackets)

    def __hash__(self) -> int:
        return hash((self.dim, tuple(self.brackets.items())))

    @property
    def zero(self):
        return Fraction(0) if self.field_d == 1 else Scalar(0, 0, self.field_d)

    @property
    def one(self):
        return Fraction(1) if self.field_d == 1 else Scalar(1, 0, self.field_d)

    def support(self) -> list[Triple]:
        return list(self.brackets)

    def bracket(self, i: int, j: int) -> dict[int, object]:
        """Coordinates of [e_i, e_j] as ``{k: value}``; antisymmetric in (i, j)."""
        if i == j:
            return {}
        sgn = 1
        if i > j:
            i, j, sgn = j, i, -1
        return {k: sgn * v for (a, b, k), v in self._values.items() if a == i and b == j}

    def table(self) -> dict[tuple[int, int], dict[int, object]]:
        """Full antisymmetric table ``{(i, j): {k: C_ij^k}}`` for i != j."""
        t: dict[tuple[int, int], dict[int, object]] = {}
        for (i, j, k), v in self._values.items():
            t.setdefault((i, j), {})[k] = v
            t.setdefault((j, i), {})[k] = -v
        return t

    def bracket_vectors(self, u: Mapping[int, object], v: Mapping[int, object], table=None) -> dict:
        t = self.table() if table is None else table
        out: dict[int, object] = {}
        for i, ui in u.items():
            if not ui:
                continue
            for j, vj in v.items():
                if not vj:
                    continue
                for k, c in t.get((i, j), {}).items():
                    nv = out.get(k, 0) + ui * vj * c
                    if nv:
                        out[k] = nv
                    else:
                        out.pop(k, None)
        return out

    def scaled(self, factors: Mapping[Triple, object] | object) -> LieAlgebra:
        """Multiply each constant by a factor (a single scalar or a per-triple map)."""
        if isinstance(factors, Mapping):
            new = {t: c * factors.get(t, 1) for t, c in self.brackets.items()}
        else:
            new = {t: c * factors for t, c in self.brackets.items()}
        return LieAlgebra(self.dim, new, self.field_d, self.name)

    def permuted(self, perm: Iterable[int]) -> LieAlgebra:
        """Relabel e_i as e_{perm[i-1]}."""
        p = [0, *perm]
        new: dict[Triple, Scalar] = {}
        for (i, j, k), c in self.brackets.items():
            a, b, s = p[i], p[j], c
            if a > b:
                a, b, s = b, a, -c
            new[(a, b, p[k])] = new.get((a, b, p[k]), 0) + s
        return LieAlgebra(self.dim, new, self.field_d, self.name)


@dataclass(frozen=True)
class Cocycle:
    """Skew form sum of w_ij e_i^* ^ e_j^* on an algebra of dimension ``dim``."""

    dim: int
    terms: Mapping[tuple[int, int], object]

    def __post_init__(self) -> None:
        clean = {}
        for (i, j), w in self.terms.items():
            if not (1 <= i < j <= self.dim):
                raise ValueError(f"bad cocycle index {(i, j)}")
            if w:
                clean[(i, j)] = w
        object.__setattr__(self, "terms", MappingProxyType(dict(sorted(clean.items()))))

    def __call__(self, u: Mapping[int, object], v: Mapping[int, object]):
        s = 0
        for (i, j), w in self.terms.items():
            s = s + w * (u.get(i, 0) * v.get(j, 0) - u.get(j, 0) * v.get(i, 0))
        return s


# -- structural checks -------------------------------------------------------


def jacobi_check(alg: LieAlgebra) -> list[tuple[Triple, dict[int, object]]]:
    """All triples i<j<k whose cyclic Jacobi sum is nonzero, with the sum."""
    t = alg.table()
    n = alg.dim
    bad = []
    for i, j, k in combinations(range(1, n + 1), 3):
        total: dict[int, object] = {}
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            inner = t.get((a, b))
            if not inner:
                continue
            for kk, vv in alg.bracket_vectors(inner, {c: 1}, t).items():
                nv = total.get(kk, 0) + vv
                if nv:
                    total[kk] = nv
                else:
                    total.pop(kk, None)
        if total:
            bad.append(((i, j, k), dict(sorted(total.items()))))
    return bad


@dataclass(frozen=True)
class CentralSeries:
    dims: tuple[int, ...]
    is_nilpotent: bool
    is_filiform: bool


def _span_basis(vectors: Iterable[dict], n: int) -> list[dict]:
    e = Echelon()
    for v in vectors:
        e.add({k - 1: x for k, x in v.items()})
    return [{c + 1: x for c, x in row.items()} for row in e.pivots.values()]


def lower_central_series(alg: LieAlgebra) -> CentralSeries:
    n = alg.dim
    t = alg.table()
    current = [{i: alg.one} for i in range(1, n + 1)]
    dims = [n]
    while True:
        products = (
            alg.bracket_vectors({a: alg.one}, v, t) for a in range(1, n + 1) for v in current
        )
        nxt = _span_basis(products, n)
        if len(nxt) == len(current):
            break
        dims.append(len(nxt))
        current = nxt
        if not nxt:
            break
    nilpotent = dims[-1] == 0
    filiform = nilpotent and n >= 3 and tuple(dims) == (n, *range(n - 2, -1, -1))
    return CentralSeries(tuple(dims), nilpotent, filiform)


def center(alg: LieAlgebra) -> list[tuple]:
    """Basis of the center as coordinate tuples (length ``dim``)."""
    n = alg.dim
    # [e_a, x] = sum_b x_b C_ab^k ; one row per (a, k), column b
    rows: dict[tuple[int, int], dict] = {}
    for (i, j, k), c in alg._values.items():
        ri = rows.setdefault((i, k), {})
        ri[j - 1] = ri.get(j - 1, 0) + c
        rj = rows.setdefault((j, k), {})
        rj[i - 1] = rj.get(i - 1, 0) - c
    return [tuple(v) for v in nullspace(rows.values(), n, alg.zero, alg.one)]


def central_extension(alg: LieAlgebra, omega: Cocycle, name: str | None = None) -> LieAlgebra:
    """Extend by a new central e_{n+1} with [X, Y] = [X, Y]_old + omega(X, Y) e_{n+1}."""
    n = alg.dim
    if omega.dim != n:
        raise ValueError(f"cocycle is on dimension {omega.dim}, algebra has {n}")
    t = alg.table()
    for i, j, k in combinations(range(1, n + 1), 3):
        s = 0
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            s = s + omega(t.get((a, b), {}), {c: 1})
        if s:
            raise CocycleError((i, j, k), s)
    new = dict(alg.brackets)
    for (i, j), w in omega.terms.items():
        new[(i, j, n + 1)] = w
    d = alg.field_d
    for w in omega.terms.values():
        if isinstance(w, Scalar) and w.d != 1:
            d = w.d
    return LieAlgebra(n + 1, new, d, name)


def quotient_last(alg: LieAlgebra) -> LieAlgebra:
    """Drop e_n, assumed central (inverse of :func:`central_extension`)."""
    n = alg.dim
    return LieAlgebra(
        n - 1,
        {(i, j, k): c for (i, j, k), c in alg.brackets.items() if k != n},
        alg.field_d,
    )


def is_normal_form(alg: LieAlgebra) -> bool:
    """[e1, e_i] = e_{i+1} for 2 <= i < n and [e_i, e_j] in span(e_{i+j}) otherwise."""
    n = alg.dim
    for (i, j, k), c in alg.brackets.items():
        if i == 1:
            if not (k == j + 1 and c == 1):
                return False
        elif k != i + j:
            return False
    return all((1, i, i + 1) in alg.brackets for i in range(2, n))


@dataclass(frozen=True)
class B2CocycleReport:
    passed: bool
    violations: tuple[tuple[Triple, object], ...]


def b2_cocycle_check(alg: LieAlgebra) -> B2CocycleReport:
    """Check c_ij(-1)^k + c_jk(-1)^i + c_ki(-1)^j = 0 over distinct i,j,k >= 2, i+j+k = dim+2.

    Decides whether the normal-form cocycle sum (-1)^i e_i^* ^ e_{N+1-i}^*
    (N = dim + 1) extends ``alg`` to a graded filiform algebra.
    """
    if not is_normal_form(alg):
        raise NormalFormError(f"{alg.name or 'algebra'} is not in [e1, e_i] = e_(i+1) normal form")
    target = alg.dim + 2

    def c(a: int, b: int):
        return alg.bracket(a, b).get(a + b, 0)

    def sgn(x: int) -> int:
        return -1 if x % 2 else 1

    bad = []
    for i, j, k in combinations(range(2, alg.dim + 1), 3):
        if i + j + k != target:
            continue
        v = c(i, j) * sgn(k) + c(j, k) * sgn(i) + c(k, i) * sgn(j)
        if v:
            bad.append(((i, j, k), v))
    return B2CocycleReport(not bad, tuple(bad))


def b2_cocycle(base_dim: int) -> Cocycle:
    """The normal-form cocycle sum_{i=2}^{m} (-1)^i e_i^* ^ e_{2m+1-i}^*, 2m = base_dim + 1."""
    n = base_dim + 1
    if n % 2:
        raise ValueError("extension dimension must be even")
    m = n // 2
    return Cocycle(base_dim, {(i, n + 1 - i): Fraction((-1) ** i) for i in range(2, m + 1)})


# -- text format --------------------------------------------------------------


def parse_algebra(text: str) -> LieAlgebra:
    name = None
    dim = None
    d = 1
    raw: list[tuple[int, Triple, str]] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        key, _, rest = s.partition(" ")
        rest = rest.strip()
        if key == "name":
            name = rest or None
        elif key == "dim":
            try:
                dim = int(rest)
            except ValueError:
                raise AlgebraParseError(f"bad dim {rest!r}", lineno) from None
        elif key == "field":
            parts = rest.split()
            if len(parts) != 2 or parts[0] != "sqrt" or not parts[1].isdigit():
                raise AlgebraParseError(f"expected 'field sqrt <d>', got {s!r}", lineno)
            d = int(parts[1])
        elif key == "bracket":
            parts = rest.split()
            if len(parts) != 4:
                raise AlgebraParseError("expected 'bracket <i> <j> <k> <coef>'", lineno)
            try:
                i, j, k = (int(x) for x in parts[:3])
            except ValueError:
                raise AlgebraParseError(f"bad indices in {s!r}", lineno) from None
            raw.append((lineno, (i, j, k), parts[3]))
        else:
            raise AlgebraParseError(f"unknown directive {key!r}", lineno)
    if dim is None:
        raise AlgebraParseError("missing 'dim' line")
    brackets: dict[Triple, Scalar] = {}
    for lineno, (i, j, k), coef in raw:
        if not i < j:
            raise AlgebraParseError(f"bracket needs i < j, got ({i}, {j})", lineno)
        if not (1 <= i and j <= dim and 1 <= k <= dim):
            raise AlgebraParseError(f"index out of range for dim {dim}", lineno)
        if (i, j, k) in brackets:
            raise AlgebraParseError(f"duplicate bracket ({i}, {j}, {k})", lineno)
        try:
            brackets[(i, j, k)] = parse_scalar(coef, d)
        except ValueError as exc:
            raise AlgebraParseError(str(exc), lineno) from None
    try:
        return LieAlgebra(dim, brackets, d, name)
    except ValueError as exc:
        raise AlgebraParseError(str(exc)) from None


def format_algebra(alg: LieAlgebra) -> str:
    lines = []
    if alg.name:
        lines.append(f"name {alg.name}")
    lines.append(f"dim {alg.dim}")
    if alg.field_d != 1:
        lines.append(f"field sqrt {alg.field_d}")
    for (i, j, k), c in alg.brackets.items():
        lines.append(f"bracket {i} {j} {k} {format_scalar(c)}")
    return "\n".join(lines) + "\n"


def load_algebra(path: str | Path) -> LieAlgebra:
    return parse_algebra(Path(path).read_text(encoding="utf-8"))


def save_algebra(alg: LieAlgebra, path: str | Path) -> None:
    Path(path).write_text(format_algebra(alg), encoding="utf-8")
