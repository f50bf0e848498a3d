"""Command-line front end.

Exit status: 0 when the report is clean, 1 when it lists violations, 2 for
usage errors and unreadable or malformed input.  ``COLORALG_WORKERS`` sets
how many processes the auditor fan-out may use (default 1).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import envelope, graded_algebra, grassmann_rep, matrix_oracle, superalgebra_io, tensor_builder
from .clifford import Signature, check_sign_law
from .report import Report

EXIT_OK, EXIT_VIOLATIONS, EXIT_USAGE = 0, 1, 2
AUDITORS = ("closure", "antisymmetry", "jacobi")


class UsageError(Exception):
    pass


def workers() -> int:
    raw = os.environ.get("COLORALG_WORKERS", "1")
    try:
        n = int(raw)
    except ValueError:
        raise UsageError(f"COLORALG_WORKERS must be an integer, got {raw!r}") from None
    if n < 1:
        raise UsageError(f"COLORALG_WORKERS must be positive, got {n}")
    return n


def _run_auditor(args):
    name, A = args
    return getattr(graded_algebra, f"check_{name}")(A)


def audit_all(A: graded_algebra.ColorAlgebra, command: str, parameters: dict) -> Report:
    """Run the three auditors (in parallel when allowed) and merge in a fixed order."""
    jobs = [(name, A) for name in AUDITORS]
    n = workers()
    if n > 1:
        with ProcessPoolExecutor(max_workers=min(n, len(jobs))) as pool:
            reports = list(pool.map(_run_auditor, jobs))
    else:
        reports = [_run_auditor(j) for j in jobs]
    out = Report(command, parameters, 0, [])
    for r in reports:
        out = out.merge(r)
    return out


def _signature(args) -> Signature:
    try:
        return Signature(args.p, args.q)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(report: Report, as_json: bool, extra: list[str] = ()) -> int:
    if as_json:
        print(report.to_json())
    else:
        for line in extra:
            print(line)
        print(report.summary())
        for v in report.violations[:50]:
            print(f"  {v.lhs} != {v.rhs}   residual: {v.residual}")
        if len(report.violations) > 50:
            print(f"  ... {len(report.violations) - 50} more")
    return EXIT_OK if report.ok else EXIT_VIOLATIONS


def _load_super(ref: str) -> superalgebra_io.Superalgebra:
    try:
        return superalgebra_io.builtin(ref)
    except KeyError:
        pass
    path = Path(ref)
    if not path.exists():
        raise UsageError(f"{ref!r} is neither a builtin ({', '.join(superalgebra_io.CATALOG)}) nor a file")
    return superalgebra_io.load(path)


# ------------------------------------------------------------------ commands

def cmd_verify_clifford(args) -> int:
    return _emit(check_sign_law(_signature(args)), args.json)


def cmd_verify_colorjacobi(args) -> int:
    A = graded_algebra.load_algebra(args.file, validate=False)
    return _emit(audit_all(A, "verify colorjacobi", {"file": str(args.file), "algebra": A.name}), args.json)


def cmd_build_tensor(args) -> int:
    g = _load_super(args.algebra)
    sig = _signature(args)
    A = tensor_builder.build_color_super(g, sig)
    graded_algebra.save_algebra(A, args.out)
    lines = [f"built {A.name}: dim {A.dim} (expected {tensor_builder.expected_dimension(g, sig)}) -> {args.out}"]
    params = {"algebra": g.name, "p": sig.p, "q": sig.q, "out": str(args.out)}
    if args.audit:
        return _emit(audit_all(A, "build tensor", params), args.json, lines)
    return _emit(Report("build tensor", params, 0, []), args.json, lines)


def cmd_bf_verify(args) -> int:
    report = envelope.verify_bf_relations(args.modes)
    if report.ok:
        # relations hold, so the span algebra exists; add its Jacobi sweep
        A = envelope.export_bf(args.modes)
        report = report.merge(graded_algebra.check_jacobi(A))
    return _emit(report, args.json)


def cmd_bf_export(args) -> int:
    A = envelope.export_bf(args.modes)
    graded_algebra.save_algebra(A, args.out)
    report = Report("bf export", {"modes": args.modes, "out": str(args.out), "dim": A.dim}, A.dim, [])
    return _emit(report, args.json, [f"wrote {A.name} ({A.dim} basis elements) to {args.out}"])


def cmd_rep_verify(args) -> int:
    report = grassmann_rep.verify_representation(args.max_degree)
    lines = [f"pairs: {report.checked_count}", f"monomials: {report.parameters['monomials']}"]
    return _emit(report, args.json, lines)


def cmd_rep_show(args) -> int:
    try:
        print(grassmann_rep.show(args.generator))
    except (KeyError, ValueError) as exc:
        raise UsageError(str(exc.args[0] if exc.args else exc)) from None
    return EXIT_OK


def cmd_oracle_gamma(args) -> int:
    sig = _signature(args)
    if sig.n > 8:
        raise UsageError("gamma oracle supports p+q <= 8")
    report = matrix_oracle.check_defining_relations(sig)
    if sig.n <= 6:
        report = report.merge(matrix_oracle.check_kappa_against_matrices(sig))
    if args.dump:
        gs = matrix_oracle.gamma_matrices(sig)
        Path(args.dump).write_text(matrix_oracle.dump_matrices({f"g{i + 1}": g for i, g in enumerate(gs)}))
    return _emit(report, args.json)


def cmd_oracle_fock(args) -> int:
    if args.cutoff < 6:
        raise UsageError("cutoff must be at least 6")
    report = matrix_oracle.check_bf_on_fock(args.modes, args.cutoff)
    if args.dump:
        Path(args.dump).write_text(matrix_oracle.dump_matrices(matrix_oracle.fock_matrices(args.modes, args.cutoff)))
    return _emit(report, args.json)


# -------------------------------------------------------------------- parser

def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="colorsuper", description="Exact checks for color superalgebras.")
    top = parser.add_subparsers(dest="group", required=True)

    def leaf(sub, name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="print the report as JSON")
        p.set_defaults(func=func)
        return p

    def pq(p):
        p.add_argument("--p", type=_nonneg, required=True)
        p.add_argument("--q", type=_nonneg, required=True)

    verify = top.add_parser("verify").add_subparsers(dest="cmd", required=True)
    pq(leaf(verify, "clifford", cmd_verify_clifford, "Clifford sign law over every blade pair"))
    p = leaf(verify, "colorjacobi", cmd_verify_colorjacobi, "audit a color algebra JSON file")
    p.add_argument("--file", type=Path, required=True)

    build = top.add_parser("build").add_subparsers(dest="cmd", required=True)
    p = leaf(build, "tensor", cmd_build_tensor, "superalgebra (x) Clifford color superalgebra")
    p.add_argument("--algebra", required=True, help="builtin name or superalgebra JSON file")
    pq(p)
    p.add_argument("--out", type=Path, required=True)
    p.add_argument("--audit", action="store_true")

    bf = top.add_parser("bf").add_subparsers(dest="cmd", required=True)
    p = leaf(bf, "verify", cmd_bf_verify, "recompute the bf relation table")
    p.add_argument("--modes", type=_positive, required=True)
    p = leaf(bf, "export", cmd_bf_export, "write bf(n) as a color algebra JSON file")
    p.add_argument("--modes", type=_positive, required=True)
    p.add_argument("--out", type=Path, required=True)

    rep = top.add_parser("rep").add_subparsers(dest="cmd", required=True)
    p = leaf(rep, "verify", cmd_rep_verify, "check the one-mode vector field representation")
    p.add_argument("--max-degree", type=_positive, default=4)
    p = leaf(rep, "show", cmd_rep_show, "print the vector field of a generator")
    p.add_argument("generator")

    oracle = top.add_parser("oracle").add_subparsers(dest="cmd", required=True)
    p = leaf(oracle, "gamma", cmd_oracle_gamma, "gamma matrices and the kappa cross-check")
    pq(p)
    p.add_argument("--dump", type=Path)
    p = leaf(oracle, "fock", cmd_oracle_fock, "bf relations on truncated Fock matrices")
    p.add_argument("--modes", type=_positive, required=True)
    p.add_argument("--cutoff", type=_positive, required=True)
    p.add_argument("--dump", type=Path)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, graded_algebra.AlgebraError, superalgebra_io.LoadError,
            envelope.IndexRangeError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
