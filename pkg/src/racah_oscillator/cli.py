"""
Command-line interface.

Exit codes: 0 success, 1 invalid parameters, 2 verification failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

from .doubles import (build_M_racah_special, build_U_racah_special, spectrum_exact,
                      verify_double)
from .figure import stem_grid_svg
from .numerics import DomainError, HalfInteger
from .oscillator import build_model, wavefunction_table
from .spectral import charpoly_eval, eigenvalues_bisection

FIGURE1_C = ("1e-6", "0.5", "1.5", "2", "4", "8", "32")
BISECTION_TOL = 1e-12


class UsageError(Exception):
    pass


def parse_c(text: str) -> Fraction:
    try:
        c = Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse c={text!r} as an exact rational")
    if not c > 0:
        raise UsageError("c must be > 0")
    return c


def parse_j(text: str) -> HalfInteger:
    try:
        j = HalfInteger.parse(text)
    except DomainError as exc:
        raise UsageError(str(exc))
    if j.twice < 1:
        raise UsageError("j must be >= 1/2")
    return j


def parse_levels(text: str | None, dim: int) -> list:
    if text is None:
        return list(range(dim))
    try:
        levels = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"cannot parse levels {text!r}")
    bad = [n for n in levels if not 0 <= n < dim]
    if bad or not levels:
        raise UsageError(f"levels must lie in 0..{dim - 1}")
    return levels


def check_d(d: int):
    if d < 1:
        raise UsageError("d must be >= 1")


def fmt(x: float) -> str:
    s = f"{x:.12g}"
    return "0" if s in ("-0", "0") else s


def csv_text(header: list, rows: list) -> str:
    lines = [",".join(header)] + [",".join(r) for r in rows]
    return "\n".join(lines) + "\n"


def emit(text: str, output: str | None):
    if output:
        Path(output).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)


def json_text(params: dict, data, residuals: dict) -> str:
    return json.dumps({"params": params, "data": data, "residuals": residuals}, indent=2) + "\n"


def cmd_matrix(args) -> int:
    check_d(args.d)
    c = parse_c(args.c)
    M = build_M_racah_special(args.d, c)
    entries = [float(v) for v in M.offdiag]
    if args.format == "json":
        text = json_text({"d": args.d, "c": str(c)},
                         {"entries": entries, "squares": [str(s) for s in M.squares]}, {})
    elif args.format == "csv":
        text = csv_text(["k", "M_k"], [[str(k), fmt(v)] for k, v in enumerate(entries)])
    else:
        text = "\n".join(fmt(v) for v in entries) + "\n"
    emit(text, args.output)
    return 0


def verify_report(d: int, c: Fraction, backend: str, tol: float) -> dict:
    M = build_M_racah_special(d, c)
    exact = spectrum_exact(d)
    U = build_U_racah_special(d, c)
    res = verify_double(M, U, exact)
    oracle = eigenvalues_bisection(M, BISECTION_TOL)
    report = {
        "eigen_residual": res.eigen,
        "orthogonality_residual": res.orthogonality,
        "spectrum_deviation": float(np.max(np.abs(oracle - np.array(exact, dtype=float)))),
    }
    ok = all(v <= tol for v in report.values())
    if backend == "rational":
        zeros = [lam for lam in exact if charpoly_eval(M, Fraction(lam)) == 0]
        report["charpoly_exact_zeros"] = len(zeros)
        ok = ok and len(zeros) == len(exact)
    report["passed"] = ok
    return report


def cmd_verify(args) -> int:
    check_d(args.d)
    c = parse_c(args.c)
    if not args.tol > 0:
        raise UsageError("tol must be > 0")
    report = verify_report(args.d, c, args.backend, args.tol)
    if args.format == "json":
        residuals = {k: v for k, v in report.items() if k != "passed"}
        text = json_text({"d": args.d, "c": str(c), "backend": args.backend, "tol": args.tol},
                         {"passed": report["passed"]}, residuals)
    else:
        lines = [
            f"d = {args.d}, c = {c}, tol = {args.tol:g}",
            f"max|MU - UD|: {report['eigen_residual']:.3e}",
            f"max|U^T U - I|: {report['orthogonality_residual']:.3e}",
            f"bisection spectrum deviation: {report['spectrum_deviation']:.3e}",
        ]
        if "charpoly_exact_zeros" in report:
            n = report["charpoly_exact_zeros"]
            if n == args.d + 1:
                lines.append(f"charpoly certificate: exact zero at all {n} eigenvalues")
            else:
                lines.append(f"charpoly certificate: FAILED ({n} of {args.d + 1} exact zeros)")
        lines.append("PASS" if report["passed"] else "FAIL")
        text = "\n".join(lines) + "\n"
    emit(text, args.output)
    return 0 if report["passed"] else 2


def cmd_spectrum(args) -> int:
    if args.j is not None:
        j = parse_j(args.j)
        d = j.twice
        scale = 0.5
        exact = [str(HalfInteger(t)) for t in spectrum_exact(d)]
    else:
        if args.d is None:
            raise UsageError("give --d or --j")
        d = args.d
        check_d(d)
        scale = 1.0
        exact = [str(t) for t in spectrum_exact(d)]
    c = parse_c(args.c)
    M = build_M_racah_special(d, c)
    oracle = scale * eigenvalues_bisection(M, BISECTION_TOL)
    dev = float(np.max(np.abs(oracle - scale * np.array(spectrum_exact(d), dtype=float))))
    if args.format == "json":
        text = json_text({"d": d, "c": str(c), "j": args.j},
                         {"exact": exact, "oracle": [float(v) for v in oracle]},
                         {"max_deviation": dev})
    else:
        text = (f"exact: {' '.join(exact)}\n"
                f"oracle: {' '.join(fmt(v) for v in oracle)}\n"
                f"max deviation: {dev:.3e}\n")
    emit(text, args.output)
    return 0 if dev <= args.tol else 2


def wavefunction_csv(table) -> str:
    header = ["q"] + [f"phi{n}" for n in table.levels]
    rows = [[q.decimal()] + [fmt(v) for v in table.values[:, i]]
            for i, q in enumerate(table.grid)]
    return csv_text(header, rows)


def cmd_wavefunction(args) -> int:
    j = parse_j(args.j)
    c = parse_c(args.c)
    model = build_model(j, c)
    levels = parse_levels(args.levels, model.dim)
    table = wavefunction_table(model, levels)
    if args.format == "json":
        data = {"q": [q.decimal() for q in table.grid]}
        for n, row in zip(table.levels, table.values):
            data[f"phi{n}"] = [float(v) for v in row]
        text = json_text({"j": str(j), "c": str(c), "levels": list(table.levels)}, data,
                         {"parity": table.parity_residual(),
                          "orthonormality": table.row_orthonormality_residual()})
    else:
        text = wavefunction_csv(table)
    emit(text, args.output)
    return 0


def c_label(text: str) -> str:
    return text.strip().replace("/", "_")


def cmd_figure1(args) -> int:
    j = parse_j(args.j)
    c_texts = [t for t in args.c_values.split(",") if t.strip()]
    if not c_texts:
        raise UsageError("no c values given")
    cs = [parse_c(t) for t in c_texts]
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    rows = []
    written = []
    levels = None
    for text, c in zip(c_texts, cs):
        model = build_model(j, c)
        levels = parse_levels(args.levels, model.dim)
        table = wavefunction_table(model, levels)
        path = out / f"figure1_c_{c_label(text)}.csv"
        path.write_text(wavefunction_csv(table), encoding="utf-8", newline="\n")
        written.append(path)
        rows.append((f"{float(c):g}", [float(q) for q in table.grid], list(table.values)))
    if not args.no_svg:
        path = out / "figure1.svg"
        svg = stem_grid_svg(rows, levels, title=f"Discrete wavefunctions, j = {j}")
        path.write_text(svg, encoding="utf-8", newline="\n")
        written.append(path)
    for p in written:
        print(p)
    return 0


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="racah-osc",
        description="Racah two-diagonal matrices and the c-deformed finite oscillator.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("matrix", help="off-diagonal entries M_0..M_{d-1}")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--c", default="1")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.add_argument("--output")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("verify", help="check MU = UD, orthogonality and the spectrum")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--c", default="1")
    p.add_argument("--backend", choices=("float", "rational"), default="float")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--output")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("spectrum", help="exact spectrum and the bisection oracle")
    p.add_argument("--d", type=int)
    p.add_argument("--j")
    p.add_argument("--c", default="1")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--output")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("wavefunction", help="table of Phi_n(q)")
    p.add_argument("--j", required=True)
    p.add_argument("--c", required=True)
    p.add_argument("--levels", help="comma-separated, default all")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--output")
    p.set_defaults(func=cmd_wavefunction)

    p = sub.add_parser("figure1", help="wavefunction panels for several c (CSV + SVG)")
    p.add_argument("--j", default="33/2")
    p.add_argument("--c-values", default=",".join(FIGURE1_C))
    p.add_argument("--levels", default="0,1,2")
    p.add_argument("--out", default="figure1")
    p.add_argument("--no-svg", action="store_true")
    p.set_defaults(func=cmd_figure1)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
