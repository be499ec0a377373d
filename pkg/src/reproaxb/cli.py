"""Command-line front end.

Matrices are read from text files (one row per line, entries are integers or
``p/q``).  Reports go to stdout, diagnostics to stderr.  Exit status is 0 for
success or a true verdict, 1 for a false or inconsistent verdict and 2 for
usage, parse and shape errors.

``--format machine`` emits a line-oriented report: ``key: value`` lines and
``[name]`` headers each followed by matrix rows in the input format, so every
matrix in a report can be read back with :func:`parse_report`.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from typing import Any, Sequence

from . import axbc, gen_inverse, structural, systems
from .ratmat import INCONSISTENT, Mat, MatrixParseError, ShapeError, format_matrix, parse_matrix, read_matrix

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_ERROR = 2


class UsageError(Exception):
    pass


@dataclass
class Report:
    command: str
    inputs: dict[str, Mat] = field(default_factory=dict)
    verdict: dict[str, Any] = field(default_factory=dict)
    exit_code: int = EXIT_OK
    error: str | None = None
    format: str = "text"


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="reproaxb", description="Exact solver for A X B = C and related matrix systems.")
    p.add_argument("--format", choices=("text", "machine"), default="text")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    rnf = sub.add_parser("rnf", help="rank normal form Q A P = E_a")
    rnf.add_argument("A")

    oneinv = sub.add_parser("oneinv", help="a {1}-inverse of A")
    oneinv.add_argument("A")
    pick = oneinv.add_mutually_exclusive_group()
    pick.add_argument("--seed", type=int)
    pick.add_argument("--zero", action="store_true", help="all free blocks zero (default)")

    check = sub.add_parser("check", help="consistency of A X B = C")
    check.add_argument("method", choices=("penrose", "structural", "oracle"))
    check.add_argument("A")
    check.add_argument("B")
    check.add_argument("C")

    solve = sub.add_parser("solve", help="solution families")
    kinds = solve.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    ax = kinds.add_parser("axbc")
    ax.add_argument("A")
    ax.add_argument("B")
    ax.add_argument("C")
    ax.add_argument("--particular", metavar="X0")
    ts = kinds.add_parser("two-sided", help="A X = B and X D = E")
    for name in ("A", "B", "D", "E"):
        ts.add_argument(name)
    cm = kinds.add_parser("commuting", help="A X A = A and A X = X A")
    cm.add_argument("A")
    pr = kinds.add_parser("presic", help="families for AX=0, XA=0, AXA=A, AX=A, XA=A")
    pr.add_argument("A")
    pr.add_argument("--eq", required=True, choices=[w.value for w in systems.Which])
    pr.add_argument("--haveric", action="store_true", help="use the A1 A A1 / A1 A / A A1 shifts")
    return p


def _load(args: argparse.Namespace, names: Sequence[str], report: Report) -> list[Mat]:
    mats = []
    for name in names:
        M = read_matrix(getattr(args, name))
        report.inputs[name] = M
        mats.append(M)
    return mats


def _describe_family(f: axbc.AffineMatMap, out: dict[str, Any], prefix: str = "") -> None:
    out[f"{prefix}shift"] = f.shift
    basis = f.image_basis()
    out[f"{prefix}dimension"] = len(basis)
    for k, b in enumerate(basis, 1):
        out[f"{prefix}basis {k}"] = b
    rep = axbc.reproductivity_of(f)
    out[f"{prefix}reproductive"] = rep.is_reproductive
    if not rep.is_reproductive:
        out[f"{prefix}reproductive reason"] = rep.reason.value
        out[f"{prefix}witness"] = rep.witness


def _cmd_rnf(args, report: Report) -> None:
    (A,) = _load(args, ["A"], report)
    rnf = gen_inverse.rank_normal_form(A)
    report.verdict.update({"rank": rnf.a, "Q": rnf.Q, "P": rnf.P, "E_a": rnf.normal_form()})


def _cmd_oneinv(args, report: Report) -> None:
    (A,) = _load(args, ["A"], report)
    fam = gen_inverse.one_inverse_family(A)
    if args.seed is not None:
        G = gen_inverse.sample_one_inverse(fam, args.seed)
    else:
        G = fam.at(*fam.zero_blocks())
    report.verdict.update({"parameters": fam.dimension, "G": G, "is one-inverse": gen_inverse.is_one_inverse(A, G)})


def _cmd_check(args, report: Report) -> None:
    A, B, C = _load(args, ["A", "B", "C"], report)
    if args.method == "penrose":
        if C.shape != (A.rows, B.cols):
            raise ShapeError(f"C must be {A.rows}x{B.cols}, got {C.rows}x{C.cols}")
        A1 = gen_inverse.canonical_one_inverse(A)
        B1 = gen_inverse.canonical_one_inverse(B)
        ok = axbc.penrose_check(A, B, C, A1, B1)
        report.verdict.update({"A1": A1, "B1": B1})
    elif args.method == "structural":
        ok = structural.structural_check(A, B, C)
    else:
        ok = axbc.is_consistent(A, B, C)
    report.verdict = {"method": args.method, "consistent": ok, **report.verdict}
    report.exit_code = EXIT_OK if ok else EXIT_FALSE


def _cmd_solve_axbc(args, report: Report) -> None:
    A, B, C = _load(args, ["A", "B", "C"], report)
    consistent = axbc.is_consistent(A, B, C)
    report.verdict["consistent"] = consistent
    if not consistent:
        report.exit_code = EXIT_FALSE
        return
    if args.particular:
        (X0,) = _load(args, ["particular"], report)
        f = axbc.solution_from_particular(A, B, C, X0)
        report.verdict["family"] = "X0 + Y - A1 A Y B B1"
        _describe_family(f, report.verdict)
        cert = axbc.representability_certificate(A, B, C, X0)
        report.verdict.update({
            "certificate": cert.verdict.value,
            "rank X0": cert.rank_X0,
            "rank bound": cert.bound,
        })
    else:
        f = axbc.general_solution(A, B, C)
        report.verdict["family"] = "A1 C B1 + Y - A1 A Y B B1"
        _describe_family(f, report.verdict)


def _cmd_solve_two_sided(args, report: Report) -> None:
    A, B, D, E = _load(args, ["A", "B", "D", "E"], report)
    res = systems.two_sided_solve(A, B, D, E)
    if res is INCONSISTENT:
        report.verdict["consistent"] = False
        report.exit_code = EXIT_FALSE
        return
    report.verdict["consistent"] = True
    _describe_family(res.general, report.verdict, "general ")
    _describe_family(res.reproductive, report.verdict, "canonical ")


def _cmd_solve_commuting(args, report: Report) -> None:
    (A,) = _load(args, ["A"], report)
    res = systems.commuting_system_solve(A)
    if res is INCONSISTENT:
        report.verdict["consistent"] = False
        report.exit_code = EXIT_FALSE
        return
    report.verdict.update({"consistent": True, "Abar": res.abar})
    _describe_family(res.family, report.verdict)


def _cmd_solve_presic(args, report: Report) -> None:
    (A,) = _load(args, ["A"], report)
    if args.haveric:
        f = systems.haveric_family(A, args.eq)
    else:
        f = systems.presic_family(A, args.eq)
    report.verdict["equation"] = args.eq + ("'" if args.haveric else "")
    _describe_family(f, report.verdict)


_SOLVERS = {
    "axbc": _cmd_solve_axbc,
    "two-sided": _cmd_solve_two_sided,
    "commuting": _cmd_solve_commuting,
    "presic": _cmd_solve_presic,
}


def run(argv: Sequence[str]) -> Report:
    try:
        args = build_parser().parse_args(list(argv))
    except UsageError as exc:
        return Report("usage", exit_code=EXIT_ERROR, error=str(exc))
    command = args.command + (f" {args.kind}" if args.command == "solve" else "")
    if args.command == "check":
        command += f" {args.method}"
    report = Report(command, format=args.format)
    handler = {
        "rnf": _cmd_rnf,
        "oneinv": _cmd_oneinv,
        "check": _cmd_check,
    }.get(args.command) or _SOLVERS[args.kind]
    try:
        handler(args, report)
    except MatrixParseError as exc:
        report.exit_code, report.error = EXIT_ERROR, str(exc)
    except (ShapeError, ValueError) as exc:
        report.exit_code, report.error = EXIT_ERROR, f"{command}: {exc}"
    return report


def _scalar_text(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def render_machine(report: Report) -> str:
    lines = [f"command: {report.command}", f"exit: {report.exit_code}"]
    if report.error:
        lines.append(f"error: {report.error}")
    for name, M in report.inputs.items():
        lines.append(f"[input {name}]")
        lines.append(format_matrix(M))
    for key, value in report.verdict.items():
        if isinstance(value, Mat):
            lines.append(f"[{key}]")
            lines.append(format_matrix(value))
        else:
            lines.append(f"{key}: {_scalar_text(value)}")
    return "\n".join(lines) + "\n"


def render_text(report: Report) -> str:
    lines = [f"== {report.command} =="]
    for name, M in report.inputs.items():
        lines.append(f"{name} =")
        lines.extend("    " + r for r in format_matrix(M, align=True).splitlines())
    for key, value in report.verdict.items():
        if isinstance(value, Mat):
            lines.append(f"{key} =")
            lines.extend("    " + r for r in format_matrix(value, align=True).splitlines())
        else:
            lines.append(f"{key}: {_scalar_text(value)}")
    return "\n".join(lines) + "\n"


def parse_report(text: str) -> tuple[dict[str, str], dict[str, Mat]]:
    """Read back a machine-format report: (scalar fields, matrices by section name)."""
    scalars: dict[str, str] = {}
    matrices: dict[str, Mat] = {}
    section: str | None = None
    body: list[str] = []

    def flush():
        if section is not None:
            matrices[section] = parse_matrix("\n".join(body), f"[{section}]")

    for line in text.splitlines():
        if line.startswith("[") and line.endswith("]"):
            flush()
            section, body = line[1:-1], []
        elif ": " in line:
            flush()
            section, body = None, []
            key, _, value = line.partition(": ")
            scalars[key] = value
        elif section is not None:
            body.append(line)
    flush()
    return scalars, matrices


def main(argv: Sequence[str] | None = None) -> int:
    report = run(sys.argv[1:] if argv is None else argv)
    if report.error:
        print(report.error, file=sys.stderr)
    else:
        sys.stdout.write(render_machine(report) if report.format == "machine" else render_text(report))
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
