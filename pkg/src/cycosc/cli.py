"""Command-line front-end: spectra, relation suites, sweeps, and dumps.

Exit codes: 0 success, 1 a relation check failed, 2 bad input or parameters,
3 I/O failure.  Numbers are printed with round-trip-exact formatting (repr),
so CSV and JSON output of the same run carry identical values.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import math
import re
import sys

import numpy as np

from .algebra import (
    AlgebraParams,
    DomainError,
    InvalidParamsError,
    new_params,
    params_from_dict,
    params_to_dict,
)
from .fock import RelationReport, build_rep, check_relations, klein_reduction_check, rep_to_dict
from .shape_invariance import build_hierarchy, partner_check, sqm2_check
from .spectrum import analytic_spectrum, classify_degeneracy, sweep
from .variants import (
    equal_spacing_r,
    ossqm_build,
    ossqm_check,
    pseudo_check,
    pseudo_family1_build,
    pseudo_family2_build,
    pssqm_build,
    pssqm_check,
    pssqm_cubic_check,
    variant_to_dict,
)

SUITES = (
    "algebra",
    "klein",
    "partners",
    "sqm2",
    "pssqm",
    "pssqm-cubic",
    "pseudo1",
    "pseudo2",
    "ossqm",
)
VARIANT_KINDS = ("pssqm", "pssqm-cubic", "pseudo1", "pseudo2", "ossqm")


def _fmt(value) -> str:
    """Round-trip-exact text for a scalar; empty for None, lowercase booleans."""
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return repr(float(value))


def _parse_alpha(text: str) -> list[float]:
    try:
        return [float(part) for part in text.split(",")]
    except ValueError as exc:
        raise DomainError(f"could not parse --alpha value {text!r}: {exc}") from None


def _resolve_params(args) -> AlgebraParams:
    """Build parameters from --params file.json or --lambda/--alpha, exactly one."""
    inline = args.lam is not None or args.alpha is not None
    if args.params_file is not None and inline:
        raise DomainError("--params and --lambda/--alpha are mutually exclusive")
    if args.params_file is not None:
        with open(args.params_file, encoding="utf-8") as fh:
            try:
                obj = json.load(fh)
            except json.JSONDecodeError as exc:
                raise DomainError(f"malformed params file: {exc}") from None
        return params_from_dict(obj)
    if args.lam is None or args.alpha is None:
        raise DomainError("provide either --params FILE or both --lambda and --alpha")
    return new_params(args.lam, _parse_alpha(args.alpha))


_AXIS_RE = re.compile(r"a(\d+)=(-?[0-9.eE+-]+):(-?[0-9.eE+-]+):(-?[0-9.eE+-]+)\Z")


def _parse_grid(text: str, lam: int) -> list[np.ndarray]:
    """Parse `a0=lo:hi:step[,a1=...]` into one value array per free parameter."""
    axes: dict[int, np.ndarray] = {}
    for part in text.split(","):
        m = _AXIS_RE.match(part.strip())
        if m is None:
            raise DomainError(f"malformed grid axis {part!r}, expected aK=lo:hi:step")
        idx = int(m.group(1))
        try:
            lo, hi, step = (float(m.group(k)) for k in (2, 3, 4))
        except ValueError as exc:
            raise DomainError(f"malformed grid axis {part!r}: {exc}") from None
        if idx in axes:
            raise DomainError(f"duplicate grid axis a{idx}")
        if step <= 0:
            raise DomainError(f"grid axis a{idx} needs step > 0, got {step}")
        if hi < lo:
            raise DomainError(f"grid axis a{idx} needs hi >= lo")
        count = int(math.floor((hi - lo) / step + 1e-6)) + 1
        axes[idx] = lo + step * np.arange(count)
    expected = set(range(lam - 1))
    if set(axes) != expected:
        want = ",".join(f"a{k}" for k in sorted(expected))
        got = ",".join(f"a{k}" for k in sorted(axes)) or "none"
        raise DomainError(f"grid must cover exactly {want}; got {got}")
    return [axes[k] for k in sorted(axes)]


@contextlib.contextmanager
def _open_output(path: str | None):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh


def _report_dict(report: RelationReport, suite: str | None = None) -> dict:
    out = {
        "ok": report.ok,
        "headroom": report.headroom,
        "tol": report.tol,
        "relations": [
            {"name": e.name, "residual": e.residual, "pass": e.passed}
            for e in report.entries
        ],
    }
    if suite is not None:
        out = {"suite": suite, **out}
    return out


def _print_report(report: RelationReport, suite: str, fh) -> None:
    width = max(len(e.name) for e in report.entries)
    for e in report.entries:
        status = "pass" if e.passed else "FAIL"
        print(f"{e.name:<{width}}  residual {e.residual:.3e}  {status}", file=fh)
    n_pass = sum(e.passed for e in report.entries)
    verdict = "OK" if report.ok else "FAIL"
    print(
        f"suite {suite}: {verdict} ({n_pass}/{len(report.entries)} pass,"
        f" headroom {report.headroom}, tol {_fmt(report.tol)})",
        file=fh,
    )


def cmd_spectrum(args) -> int:
    params = _resolve_params(args)
    lines = analytic_spectrum(params, args.nmax)
    report = classify_degeneracy(params, args.nmax, args.tol)
    with _open_output(args.output) as fh:
        if args.format == "json":
            obj = {
                "params": params_to_dict(params),
                "levels": [
                    {"n": l.n, "k": l.k, "mu": l.mu, "energy": l.energy}
                    for l in lines
                ],
                "classification": {
                    "pattern": report.pattern,
                    "threshold_energy": report.threshold_energy,
                    "stabilized": report.stabilized,
                    "uniform_spacing": report.uniform_spacing,
                },
            }
            json.dump(obj, fh, indent=2)
            fh.write("\n")
        else:
            print("n,k,mu,energy", file=fh)
            for l in lines:
                print(f"{l.n},{l.k},{l.mu},{_fmt(l.energy)}", file=fh)
            print(
                f"# pattern={report.pattern}"
                f",threshold_energy={_fmt(report.threshold_energy)}"
                f",stabilized={_fmt(report.stabilized)}"
                f",uniform_spacing={_fmt(report.uniform_spacing)}",
                file=fh,
            )
    return 0


def _run_suite(args, params: AlgebraParams):
    suite = args.suite
    if suite == "algebra":
        return check_relations(build_rep(params, args.dim), args.tol)
    if suite == "klein":
        return klein_reduction_check(build_rep(params, args.dim), args.tol)
    if suite == "partners":
        return partner_check(build_hierarchy(params, args.dim), args.tol)
    if suite == "sqm2":
        return sqm2_check(build_hierarchy(params, args.dim), args.mu, args.tol)
    if suite == "pssqm":
        sol = pssqm_build(params, args.mu, args.dim)
        return pssqm_check(sol, params.lam - 1, args.tol)
    if suite == "pssqm-cubic":
        sol = pssqm_build(params, args.mu, args.dim)
        return pssqm_cubic_check(sol, args.tol)
    if suite == "pseudo1":
        eta = args.eta if args.eta is not None else math.sqrt(2.0) * abs(args.c)
        sol = pseudo_family1_build(params, args.mu, args.c, eta, args.phi, args.dim)
        return pseudo_check(sol, args.c, args.tol)
    if suite == "pseudo2":
        r = args.r if args.r is not None else equal_spacing_r(params, args.mu)
        sol = pseudo_family2_build(params, args.mu, args.c, r, args.dim)
        return pseudo_check(sol, args.c, args.tol)
    if suite == "ossqm":
        sol = ossqm_build(params, args.mu, args.xi, args.phi, args.dim)
        return ossqm_check(sol, args.tol)
    raise DomainError(f"unknown suite {suite!r}")


def cmd_verify(args) -> int:
    params = _resolve_params(args)
    report = _run_suite(args, params)
    with _open_output(args.output) as fh:
        if args.format == "json":
            json.dump(_report_dict(report, args.suite), fh, indent=2)
            fh.write("\n")
        else:
            _print_report(report, args.suite, fh)
    return 0 if report.ok else 1


def cmd_sweep(args) -> int:
    if args.lam is None:
        raise DomainError("sweep requires --lambda")
    axes = _parse_grid(args.grid, args.lam)
    head = [f"alpha_{k}" for k in range(args.lam - 1)]
    with _open_output(args.output) as fh:
        print(",".join(head + ["valid", "pattern", "threshold_energy"]), file=fh)
        for rec in sweep(args.lam, axes, n_max=args.nmax, tol=args.tol, workers=args.workers):
            values = [_fmt(v) for v in rec.params.alpha[: args.lam - 1]]
            if rec.report is None:
                pattern, threshold = "", ""
            else:
                pattern = rec.report.pattern
                threshold = _fmt(rec.report.threshold_energy)
            print(",".join(values + [_fmt(rec.valid), pattern, threshold]), file=fh)
    return 0


def cmd_hierarchy(args) -> int:
    params = _resolve_params(args)
    if args.nmax >= args.dim:
        raise DomainError(f"--nmax must be below --dim, got {args.nmax} >= {args.dim}")
    h = build_hierarchy(params, args.dim)
    with _open_output(args.output) as fh:
        if args.format == "json":
            obj = {
                "params": params_to_dict(params),
                "sectors": [
                    {
                        "sector": mu,
                        "energies": [float(e) for e in np.diag(h.hmats[mu])[: args.nmax + 1]],
                    }
                    for mu in range(h.period + 1)
                ],
            }
            json.dump(obj, fh, indent=2)
            fh.write("\n")
        else:
            print("sector,n,energy", file=fh)
            for mu in range(h.period + 1):
                diag = np.diag(h.hmats[mu])
                for n in range(args.nmax + 1):
                    print(f"{mu},{n},{_fmt(diag[n])}", file=fh)
    return 0


def cmd_variant(args) -> int:
    params = _resolve_params(args)
    kind = args.kind
    if kind in ("pssqm", "pssqm-cubic"):
        sol = pssqm_build(params, args.mu, args.dim)
        if kind == "pssqm":
            report = pssqm_check(sol, params.lam - 1, args.tol)
        else:
            report = pssqm_cubic_check(sol, args.tol)
    elif kind == "pseudo1":
        eta = args.eta if args.eta is not None else math.sqrt(2.0) * abs(args.c)
        sol = pseudo_family1_build(params, args.mu, args.c, eta, args.phi, args.dim)
        report = pseudo_check(sol, args.c, args.tol)
    elif kind == "pseudo2":
        r = args.r if args.r is not None else equal_spacing_r(params, args.mu)
        sol = pseudo_family2_build(params, args.mu, args.c, r, args.dim)
        report = pseudo_check(sol, args.c, args.tol)
    elif kind == "ossqm":
        sol = ossqm_build(params, args.mu, args.xi, args.phi, args.dim)
        report = ossqm_check(sol, args.tol)
    else:
        raise DomainError(f"unknown variant kind {kind!r}")
    with _open_output(args.output) as fh:
        json.dump(variant_to_dict(sol, report, n_levels=args.nmax + 1), fh, indent=2)
        fh.write("\n")
    return 0 if report.ok else 1


def cmd_dump(args) -> int:
    params = _resolve_params(args)
    rep = build_rep(params, args.dim)
    with _open_output(args.output) as fh:
        json.dump(rep_to_dict(rep), fh, indent=2)
        fh.write("\n")
    return 0


def _add_params_flags(sub) -> None:
    sub.add_argument("--lambda", dest="lam", type=int, default=None, metavar="N",
                     help="algebra order (number of sectors)")
    sub.add_argument("--alpha", type=str, default=None, metavar="A0,A1,...",
                     help="first N-1 deformation parameters, comma separated")
    sub.add_argument("--params", dest="params_file", type=str, default=None,
                     metavar="FILE", help="JSON file {\"lambda\": N, \"alpha\": [...]}")


def _add_common_flags(sub, nmax_default: int = 20) -> None:
    sub.add_argument("--dim", type=int, default=60, help="truncation dimension")
    sub.add_argument("--tol", type=float, default=1e-10, help="check/cluster tolerance")
    sub.add_argument("--nmax", type=int, default=nmax_default,
                     help="highest level index to emit")
    sub.add_argument("--format", choices=("csv", "json"), default="csv")
    sub.add_argument("--output", type=str, default=None, help="output path (default stdout)")


def _add_variant_flags(sub) -> None:
    sub.add_argument("--mu", type=int, default=0, help="family index")
    sub.add_argument("--c", type=float, default=1.0, help="pseudosupersymmetry scale")
    sub.add_argument("--eta", type=float, default=None,
                     help="family-1 mixing (default sqrt(2)|c|)")
    sub.add_argument("--phi", type=float, default=0.0, help="phase in [0, 2 pi)")
    sub.add_argument("--xi", type=float, default=1.0,
                     help="orthosupersymmetry mixing in (0, sqrt(2)]")
    sub.add_argument("--r", type=float, default=None,
                     help="family-2 spectrum constant (default: equal spacing)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cycosc",
        description="Cyclic-group extended oscillator algebras: spectra, "
        "supersymmetry-variant charges, and relation checks on truncated "
        "Fock representations.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sp = subs.add_parser("spectrum", help="analytic spectrum and degeneracy pattern")
    _add_params_flags(sp)
    _add_common_flags(sp)
    sp.set_defaults(func=cmd_spectrum)

    vf = subs.add_parser("verify", help="run one relation-check suite")
    vf.add_argument("--suite", choices=SUITES, required=True)
    _add_params_flags(vf)
    _add_common_flags(vf)
    _add_variant_flags(vf)
    vf.set_defaults(func=cmd_verify)

    sw = subs.add_parser("sweep", help="classify spectra over a parameter grid")
    sw.add_argument("--lambda", dest="lam", type=int, required=True, metavar="N")
    sw.add_argument("--grid", type=str, required=True, metavar="a0=lo:hi:step[,a1=...]")
    sw.add_argument("--nmax", type=int, default=60)
    sw.add_argument("--tol", type=float, default=1e-9)
    sw.add_argument("--workers", type=int, default=1)
    sw.add_argument("--output", type=str, default=None)
    sw.set_defaults(func=cmd_sweep)

    hi = subs.add_parser("hierarchy", help="partner Hamiltonian spectra per sector")
    _add_params_flags(hi)
    _add_common_flags(hi)
    hi.set_defaults(func=cmd_hierarchy)

    va = subs.add_parser("variant", help="build one charge/Hamiltonian solution as JSON")
    va.add_argument("--kind", choices=VARIANT_KINDS, required=True)
    _add_params_flags(va)
    _add_common_flags(va)
    _add_variant_flags(va)
    va.set_defaults(func=cmd_variant)

    du = subs.add_parser("dump", help="emit the truncated representation matrices")
    _add_params_flags(du)
    _add_common_flags(du)
    du.set_defaults(func=cmd_dump)
    return parser


def _glue_values(argv: list[str]) -> list[str]:
    """Join `--alpha -2,0` into `--alpha=-2,0` so leading minus signs parse."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in ("--alpha", "--grid") and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    raw = list(sys.argv[1:]) if argv is None else list(argv)
    parser = build_parser()
    args = parser.parse_args(_glue_values(raw))
    try:
        return args.func(args)
    except InvalidParamsError as exc:
        print(f"invalid parameters: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
