"""Command-line front end.

    nilrad check FILE [--json] [--certificate-out PATH]
    nilrad gen FAMILY [N] [PARAM] [--sqrt D] [-o FILE]
    nilrad verify-cert ALGEBRA_FILE CERT_FILE
    nilrad reproduce fili [--n-min 8] [--n-max 11]
    nilrad b2-scan
    nilrad nilsoliton FILE [--max-iter N] [--tol T] [--trace CSV]

Exit codes for ``check``: 0 YES, 1 NO, 2 inapplicable or ill-formed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Sequence

from . import catalog
from .convex_cert import (
    NO,
    YES,
    AlphaSystem,
    Certificate,
    alpha_set,
    decide_einstein,
    format_certificate,
    parse_certificate,
    verify_certificate,
)
from .derivations import derivation_space, necessary_condition, pre_einstein
from .errors import (
    AlgebraParseError,
    NilradError,
    NotApplicableError,
    NotTorusAdaptedError,
    UnderdeterminedError,
)
from .lie_core import (
    LieAlgebra,
    b2_cocycle,
    b2_cocycle_check,
    central_extension,
    format_algebra,
    jacobi_check,
    load_algebra,
    lower_central_series,
)
from .scalar import parse_scalar

EXIT_YES, EXIT_NO, EXIT_INAPPLICABLE = 0, 1, 2


def _q(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass
class CheckReport:
    algebra_name: str
    jacobi_ok: bool = False
    nilpotent: bool | None = None
    filiform: bool | None = None
    pre_einstein_diag: list[str] | None = None
    eigen_type: str | None = None
    simple: bool | None = None
    necessary_ok: bool | None = None
    verdict: str | None = None
    certificate: dict | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return {YES: EXIT_YES, NO: EXIT_NO}.get(self.verdict, EXIT_INAPPLICABLE)

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> CheckReport:
        return cls(**json.loads(text))

    def text(self) -> str:
        rows = [
            ("algebra", self.algebra_name),
            ("jacobi", "ok" if self.jacobi_ok else "FAILS"),
            ("nilpotent", self.nilpotent),
            ("filiform", self.filiform),
            ("pre-Einstein", " ".join(self.pre_einstein_diag) if self.pre_einstein_diag else None),
            ("eigenvalue type", self.eigen_type),
            ("simple", self.simple),
            ("necessary", self.necessary_ok),
            ("verdict", self.verdict),
        ]
        out = [f"{k:16s} {str(v).lower() if isinstance(v, bool) else v}" for k, v in rows if v is not None]
        if self.certificate:
            key = "v" if self.verdict == YES else "a"
            out.append(f"{'certificate ' + key:16s} {' '.join(self.certificate[key])}")
        out.extend(f"note: {n}" for n in self.notes)
        return "\n".join(out)


def certificate_dict(cert: Certificate) -> dict:
    key, vec = ("v", cert.v) if cert.verdict == YES else ("a", cert.a)
    return {"verdict": cert.verdict, key: [_q(x) for x in vec], "order": [list(t) for t in cert.order]}


def certificate_from_dict(d: dict) -> Certificate:
    vec = lambda k: tuple(Fraction(x) for x in d[k]) if k in d else None  # noqa: E731
    return Certificate(d["verdict"], tuple(tuple(t) for t in d["order"]), v=vec("v"), a=vec("a"))


def run_check(alg: LieAlgebra) -> tuple[CheckReport, Certificate | None]:
    """Full pipeline; stops at the first stage that rules the criterion out."""
    rep = CheckReport(alg.name or "unnamed")
    bad = jacobi_check(alg)
    rep.jacobi_ok = not bad
    if bad:
        triple, defect = bad[0]
        vec = " + ".join(f"{c}*e{k}" for k, c in defect.items())
        rep.notes.append(f"Jacobi identity fails at {triple}: cyclic sum {vec}")
        return rep, None
    cs = lower_central_series(alg)
    rep.nilpotent, rep.filiform = cs.is_nilpotent, cs.is_filiform
    if not cs.is_nilpotent:
        rep.notes.append(f"not nilpotent: central series stabilizes at dimension {cs.dims[-1]}")
        return rep, None
    try:
        der = derivation_space(alg)
        phi = pre_einstein(alg, der)
    except (NotTorusAdaptedError, UnderdeterminedError) as exc:
        rep.notes.append(str(exc))
        return rep, None
    rep.pre_einstein_diag = [_q(x) for x in phi.diag]
    rep.simple = phi.simple
    rep.eigen_type = str(phi.eigen_type) if phi.eigen_type else None
    nec = necessary_condition(alg, phi)
    rep.necessary_ok = nec.ok
    if not phi.simple:
        rep.notes.append(f"spectrum not simple {phi.eigen_type}" if phi.eigen_type
                         else "spectrum not simple")
        return rep, None
    if not nec.ok:
        what = "pre-Einstein derivation not positive" if not nec.phi_positive else (
            "ad_phi has negative weights on Der: "
            + ", ".join(_q(w) for w in nec.weights if w < 0))
        rep.notes.append(f"necessary condition fails: {what}; not an Einstein nilradical")
        return rep, None
    try:
        S = alpha_set(alg, phi)
    except NotApplicableError as exc:
        rep.notes.append(str(exc))
        return rep, None
    cert = decide_einstein(S)
    rep.verdict = cert.verdict
    rep.certificate = certificate_dict(cert)
    return rep, cert


# -- batch reproductions ------------------------------------------------------


@dataclass(frozen=True)
class Row:
    label: str
    expected: str
    got: str

    @property
    def ok(self) -> bool:
        return self.expected == self.got


def _verdict(alg: LieAlgebra) -> str:
    rep, _ = run_check(alg)
    return rep.verdict or "N/A"


GENERIC_ALPHAS = (Fraction(1), Fraction(3), Fraction(-1, 3))

# exceptional parameters and their verdicts in dimensions 8..11
EXCEPTIONAL = {
    8: {-2: NO, -1: YES, 0: YES},
    9: {-2: NO, -1: YES, 0: YES, Fraction(1, 2): YES},
    10: {-2: NO, -1: NO, 0: YES, Fraction(1, 2): NO},
    11: {-2: YES, Fraction(-1, 4): YES, 0: YES, Fraction(1, 2): YES},
}


def reproduce_filiform(n_min: int = 8, n_max: int = 11) -> list[Row]:
    rows: list[Row] = []
    for n in range(n_min, n_max + 1):
        rows.append(Row(f"m2({n})", NO, _verdict(catalog.m2(n))))
        fam = {1: ("m01", catalog.m01), 0: ("m02", catalog.m02)}[n % 2]
        rows.append(Row(f"{fam[0]}({n})", NO, _verdict(fam[1](n))))
        if n % 2 == 1 and n >= 9:
            rows.append(Row(f"m03({n})", NO, _verdict(catalog.m03(n))))
        rows.append(Row(f"V({n})", YES, _verdict(catalog.witt(n))))
        if 7 <= n <= 11:
            cases = dict(EXCEPTIONAL.get(n, {}))
            for a in GENERIC_ALPHAS:
                cases.setdefault(a, YES)
            for a, exp in sorted(cases.items()):
                rows.append(Row(f"g_{_q(a)}({n})", exp, _verdict(catalog.g_alpha(n, a))))
        if n == 11:
            for which in (1, 2):
                S = AlphaSystem.from_support(11, catalog.g11_cubic_root_support(which))
                rows.append(Row(f"g_a{which}(11) [root support]", YES, decide_einstein(S).verdict))
    return rows


B2_NAMES = {
    "m2(5)": "b(6)",
    "g_-5/2(7)": "b(8)",
    "g_-1(9)": "b1(10)",
    "g_-3(9)": "b2(10)",
    "g_-2+1/2*sqrt10(11)": "b+(12)",
    "g_-2-1/2*sqrt10(11)": "b-(12)",
}


def b2_candidates() -> list[LieAlgebra]:
    """Odd-dimensional bases in the normal form [e1, e_i] = e_{i+1}."""
    out = [catalog.m2(n) for n in (5, 7, 9, 11)]
    out += [catalog.m01(n) for n in (7, 9, 11)]
    out += [catalog.m03(n) for n in (9, 11)]
    samples = [Fraction(-2), Fraction(-1), Fraction(0), Fraction(1, 2)]
    for a in [Fraction(-5, 2), *samples]:
        out.append(catalog.g_alpha(7, a))
    for a in [Fraction(-3), *samples]:
        out.append(catalog.g_alpha(9, a))
    for a in [catalog.SQRT10_ROOTS["+"], catalog.SQRT10_ROOTS["-"], *samples]:
        if a == -1:  # pole of g_alpha(11)
            continue
        out.append(catalog.g_alpha(11, a))
    return out


@dataclass(frozen=True)
class B2Result:
    name: str
    base: str
    dim: int
    verdict: str


def b2_scan() -> list[B2Result]:
    found = []
    for base in b2_candidates():
        if not b2_cocycle_check(base).passed:
            continue
        name = B2_NAMES.get(base.name, f"ext({base.name})")
        ext = central_extension(base, b2_cocycle(base.dim), name=name)
        found.append(B2Result(name, base.name, ext.dim, _verdict(ext)))
    return sorted(found, key=lambda r: (r.dim, r.name))


# -- argument handling --------------------------------------------------------


def _param(text: str, d: int):
    text = text.strip()
    if "sqrt" in text:
        return parse_scalar(text, d)
    return Fraction(text)


def _gen(args) -> LieAlgebra:
    fam, params = args.family, list(args.params)
    if fam == "g_alpha":
        if len(params) != 2:
            raise NilradError("g_alpha needs N and ALPHA")
        spec = catalog.FamilySpec(fam, int(params[0].strip()), _param(params[1], args.sqrt))
    elif fam in ("nt8", "two_step_p"):
        if len(params) != 1:
            raise NilradError(f"{fam} needs one parameter")
        spec = catalog.FamilySpec(fam, None, _param(params[0], args.sqrt))
    elif params:
        spec = catalog.FamilySpec(fam, int(params[0].strip()))
    else:
        spec = catalog.FamilySpec(fam)
    return catalog.generate(spec)


def cmd_check(args) -> int:
    try:
        alg = load_algebra(args.file)
    except (AlgebraParseError, OSError) as exc:
        print(f"error: cannot read algebra: {exc}", file=sys.stderr)
        return EXIT_INAPPLICABLE
    rep, cert = run_check(alg)
    print(rep.to_json() if args.json else rep.text())
    if rep.verdict is None:
        print(f"inapplicable: {rep.notes[-1]}", file=sys.stderr)
    if cert is not None and args.certificate_out:
        with open(args.certificate_out, "w") as fh:
            fh.write(format_certificate(cert))
    return rep.exit_code


def cmd_gen(args) -> int:
    alg = _gen(args)
    text = format_algebra(alg)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify(args) -> int:
    alg = load_algebra(args.algebra)
    with open(args.certificate) as fh:
        cert = parse_certificate(fh.read())
    ok = verify_certificate(alpha_set(alg), cert)
    print(f"certificate {cert.verdict} {'valid' if ok else 'INVALID'}")
    return 0 if ok else 1


def cmd_reproduce(args) -> int:
    rows = reproduce_filiform(args.n_min, args.n_max)
    for r in rows:
        print(f"{'PASS' if r.ok else 'FAIL'}  {r.label:28s} expected {r.expected:3s} got {r.got}")
    ok = all(r.ok for r in rows)
    print(f"overall {'PASS' if ok else 'FAIL'} ({sum(r.ok for r in rows)}/{len(rows)} rows)")
    return 0 if ok else 1


def cmd_b2(args) -> int:
    found = b2_scan()
    for r in found:
        print(f"{r.name:8s} dim {r.dim:2d}  extension of {r.base:20s} {r.verdict}")
    print(f"{len(found)} algebras")
    return 0


def cmd_nilsoliton(args) -> int:
    from .soliton_numeric import minimize_moment_norm, write_trace

    alg = load_algebra(args.file)
    phi = pre_einstein(alg)
    rep = minimize_moment_norm(alg, phi=phi, max_iter=args.max_iter, tol=args.tol,
                               record_trace=bool(args.trace))
    print("\n".join(rep.lines()))
    if args.trace:
        write_trace(rep, args.trace)
    return 0 if rep.converged else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="nilrad", description="Einstein nilradical decisions with certificates")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide one algebra")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--certificate-out")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("gen", help="emit a catalog algebra")
    p.add_argument("family", choices=catalog.FAMILIES)
    p.add_argument("params", nargs="*")
    p.add_argument("--sqrt", type=int, default=10, help="d for parameters written with sqrt")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify-cert", help="check a certificate against an algebra")
    p.add_argument("algebra")
    p.add_argument("certificate")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reproduce", help="rerun the filiform classification")
    p.add_argument("target", choices=["fili"])
    p.add_argument("--n-min", type=int, default=8)
    p.add_argument("--n-max", type=int, default=11)
    p.set_defaults(func=cmd_reproduce)

    p = sub.add_parser("b2-scan", help="construct and decide the central extensions")
    p.set_defaults(func=cmd_b2)

    p = sub.add_parser("nilsoliton", help="numeric moment-map descent")
    p.add_argument("file")
    p.add_argument("--max-iter", type=int, default=100_000)
    p.add_argument("--tol", type=float, default=1e-13)
    p.add_argument("--trace")
    p.set_defaults(func=cmd_nilsoliton)
    return ap


def _protect_negatives(argv: list[str]) -> list[str]:
    # argparse takes "-1/3" or "-2+1/2*sqrt" for options; a leading space
    # marks them as positional and is stripped again when parsing
    if not argv or argv[0] != "gen" or "--" in argv:
        return argv
    return [" " + t if len(t) > 1 and t[0] == "-" and (t[1].isdigit() or t[1] == ".") else t
            for t in argv]


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(_protect_negatives(argv))
    try:
        return args.func(args)
    except (NilradError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INAPPLICABLE


if __name__ == "__main__":
    sys.exit(main())
