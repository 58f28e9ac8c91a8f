"""Command-line front end.

Exit codes: 0 when everything requested passes, 1 on a verification failure,
2 on a usage error (bad flags, bad parameter ranges, unparsable forms).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .exactpoly import DimensionError, DivisibilityError, ParityError
from .chart import duality_map, duality_trace
from .notation import CoordinateError, ParseError, format_form, form_to_json, parse_expression
from .linalg import leading_principal_minors
from .spaces import FLAVORS, QuotientContext, build_basis, is_zero_on, membership
from .verify import (
    SUITES,
    ConsistencyError,
    VerificationReport,
    computed_basis,
    dim_table,
    dual_target,
    gram_matrix,
    is_positive_definite,
    suite_checks,
)

SCHEMA_VERSION = "1"
MAX_N = 8  # variables run up to x9


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="feecsphere", description="Exact polynomial differential forms on R^(n+1), T^n and S^n.")
    parser.add_argument("--json", action="store_true", help="emit a JSON report document")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def common(p):
        p.add_argument("--n", type=int, required=True, help="dimension of T^n and S^n")
        p.add_argument("--json", action="store_true", default=argparse.SUPPRESS)

    p = sub.add_parser("dual", help="apply the duality map to a form on T^n")
    common(p)
    p.add_argument("--form", required=True, help='expression such as "y*dy"')
    p.add_argument("--flavor", choices=("P", "Pminus"), help="space of the input (forward) or output (inverse)")
    p.add_argument("--inverse", action="store_true", help="apply the inverse map")
    p.add_argument("--trace", action="store_true", help="print every intermediate")

    p = sub.add_parser("basis", help="print a basis of a polynomial form space")
    common(p)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--flavor", choices=FLAVORS, default="P")
    p.add_argument("--context", default="simplex", help="ambient, simplex, sphere or face:I (1-based)")

    p = sub.add_parser("dims", help="dimension table with formulas and the rank oracle")
    common(p)
    p.add_argument("--rmax", type=int, default=3)
    p.add_argument("--no-oracle", action="store_true", help="skip the evaluation rank oracle")

    p = sub.add_parser("gram", help="Gram matrix of the duality pairing")
    common(p)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--flavor", choices=("P", "Pminus"), default="P")

    p = sub.add_parser("verify", help="run verification suites")
    common(p)
    p.add_argument("--suite", choices=("all",) + SUITES, default="all")
    p.add_argument("--rmax", type=int, default=None, help="largest r swept (default 4 for n <= 2, else 3)")
    return parser


def _context(text: str, n: int) -> QuotientContext:
    if text == "ambient":
        return QuotientContext.ambient(n)
    if text == "simplex":
        return QuotientContext.simplex(n)
    if text == "sphere":
        return QuotientContext.sphere(n)
    if text.startswith("face:"):
        try:
            i = int(text[5:]) - 1
        except ValueError:
            raise UsageError(f"bad face index in {text!r}") from None
        if not 0 <= i <= n:
            raise UsageError(f"face index must be in 1..{n + 1}")
        return QuotientContext.face(n, i)
    raise UsageError(f"unknown context {text!r}")


def _check_range(name: str, value: int, low: int, high: Optional[int] = None) -> None:
    if value < low or (high is not None and value > high):
        bound = f"{low}..{high}" if high is not None else f">= {low}"
        raise UsageError(f"--{name} must be {bound}, got {value}")


def _smallest_space(a, flavor: Optional[str], n: int) -> Optional[tuple]:
    """Smallest (flavor, r, k) simplex space holding ``a``, or None."""
    k = a.degree
    if a.is_zero():
        return None
    base = max(a.poly_degree(), 0)
    candidates = ("P", "Pminus") if flavor is None else (flavor,)
    for fl in candidates:
        r = base if fl == "P" else base + 1
        if fl == "Pminus" and (k == 0 or r < 1):
            continue
        if membership(a, computed_basis(fl, n, r, k)) is not None:
            return fl, r, k
    return None


class Output:
    def __init__(self, as_json: bool, command: str, parameters: dict):
        self.as_json = as_json
        self.doc = {"schema_version": SCHEMA_VERSION, "command": command, "parameters": parameters}
        self.lines: list[str] = []

    def text(self, line: str = "") -> None:
        self.lines.append(line)

    def emit(self) -> str:
        if self.as_json:
            return json.dumps(self.doc, sort_keys=True, indent=2) + "\n"
        return "\n".join(self.lines) + ("\n" if self.lines else "")


def cmd_dual(args, out: Output) -> int:
    n = args.n
    expr = parse_expression(args.form, n)
    if expr.coords == "u":
        raise UsageError("dual expects a form in x-coordinates")
    a = expr.form
    if a.degree > n:
        raise UsageError(f"a {a.degree}-form is zero on T^{n}")
    ok = True
    if not args.inverse:
        found = _smallest_space(a, args.flavor, n)
        if found is None and not a.is_zero():
            raise UsageError(f"input is not in {args.flavor or 'P'}_r Lambda^{a.degree} for its degree")
        tr = duality_trace(a)
        if found is not None:
            fl, r, k = found
            tf, trr, tk = dual_target(fl, n, r, k)
            ok = membership(tr.b, computed_basis(tf, n, trr, tk)) is not None
            out.doc["target"] = {"flavor": tf, "r": trr, "k": tk, "member": ok}
    else:
        try:
            tr = duality_trace(a, inverse=True)
        except (DivisibilityError, ParityError) as exc:
            raise UsageError(f"input is not in a ring space: {exc}") from None
        # the forward map must send the result back to the input
        ok = is_zero_on(duality_map(tr.b) - a, QuotientContext.simplex(n))
        if args.flavor:
            member = tr.b.is_zero() or _smallest_space(tr.b, args.flavor, n) is not None
            out.doc["target"] = {"flavor": args.flavor, "member": member}
            ok = ok and member
    if args.trace:
        for name in ("alpha", "star", "star_reduced", "beta"):
            out.text(f"{name}: {format_form(getattr(tr, name), 'u')}")
        out.text(f"b: {format_form(tr.b, 'x')}")
    else:
        out.text(format_form(tr.b, "x"))
    if not ok:
        out.text("warning: output failed its consistency check")
    out.doc["input"] = form_to_json(a)
    out.doc["degree"] = tr.b.degree
    out.doc["result"] = form_to_json(tr.b)
    out.doc["intermediates"] = {
        name: form_to_json(getattr(tr, name)) for name in ("alpha", "star", "star_reduced", "beta")
    }
    out.doc["verdict"] = "pass" if ok else "fail"
    return 0 if ok else 1


def cmd_basis(args, out: Output) -> int:
    n = args.n
    ctx = _context(args.context, n)
    _check_range("r", args.r, 0)
    _check_range("k", args.k, 0, n + 1)
    try:
        basis = build_basis(args.flavor, n, args.r, args.k, ctx)
    except (ValueError, DimensionError) as exc:
        raise UsageError(str(exc)) from None
    coords = "u" if ctx.kind in ("ambient", "sphere") else "x"
    out.text(f"{args.flavor}_{args.r} Lambda^{args.k} on {ctx.describe()}: dimension {basis.dim}")
    for i, b in enumerate(basis, 1):
        out.text(f"  {i}: {format_form(b, coords)}")
    out.doc["context"] = ctx.describe()
    out.doc["dimension"] = basis.dim
    out.doc["basis"] = [form_to_json(b) for b in basis]
    return 0


def cmd_dims(args, out: Output) -> int:
    _check_range("rmax", args.rmax, 0, 8)
    table = dim_table(args.n, args.rmax, with_oracle=not args.no_oracle)
    header = "flavor       r  k  computed  formula  oracle"
    out.text(header)
    for row in table:
        oracle_value = row.get("oracle", "-")
        mark = "" if row["agree"] else "  DISCREPANCY"
        out.text(f"{row['flavor']:<12} {row['r']:>1}  {row['k']:>1}  {row['computed']:>8}  {row['formula']:>7}  {oracle_value:>6}{mark}")
    out.doc["table"] = table
    ok = all(row["agree"] for row in table)
    out.doc["verdict"] = "pass" if ok else "fail"
    return 0 if ok else 1


def cmd_gram(args, out: Output) -> int:
    n = args.n
    _check_range("r", args.r, 0 if args.flavor == "P" else 1)
    _check_range("k", args.k, 0, n)
    basis = computed_basis(args.flavor, n, args.r, args.k)
    M = gram_matrix(basis)
    try:
        pd = is_positive_definite(M)
    except ConsistencyError as exc:
        out.text(f"not symmetric: {exc}")
        out.doc["verdict"] = "fail"
        return 1
    minors = leading_principal_minors([list(r) for r in M.entries]) if M.size else []
    width = max((len(str(v)) for row in M.entries for v in row), default=1)
    out.text(f"Gram matrix of {args.flavor}_{args.r} Lambda^{args.k}(T^{n}), size {M.size}")
    for row in M.entries:
        out.text("  " + " ".join(f"{str(v):>{width}}" for v in row))
    out.text(f"positive definite: {'yes' if pd else 'no'}")
    out.doc["matrix"] = [[str(v) for v in row] for row in M.entries]
    out.doc["leading_minors"] = [str(m) for m in minors]
    out.doc["positive_definite"] = pd
    out.doc["verdict"] = "pass" if pd else "fail"
    return 0 if pd else 1


def cmd_verify(args, out: Output) -> int:
    n = args.n
    rmax = args.rmax if args.rmax is not None else (4 if n <= 2 else 3)
    _check_range("rmax", rmax, 1, 8)
    reports: list[VerificationReport] = []
    for _, thunk in suite_checks(args.suite, n, rmax):
        rep = thunk()
        reports.append(rep)
        out.text(rep.line())
    failed = sum(not r.passed for r in reports)
    out.text(f"{len(reports) - failed} passed, {failed} failed")
    out.doc["reports"] = [r.to_json() for r in reports]
    out.doc["verdict"] = "fail" if failed else "pass"
    return 1 if failed else 0


COMMANDS = {"dual": cmd_dual, "basis": cmd_basis, "dims": cmd_dims, "gram": cmd_gram, "verify": cmd_verify}


def run_command(argv: Sequence[str]) -> tuple[int, str, str]:
    """Run one invocation; returns (exit code, stdout text, stderr text)."""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
        if args.command is None:
            raise UsageError("a subcommand is required: " + ", ".join(COMMANDS))
        _check_range("n", args.n, 1, MAX_N)
        params = {k: v for k, v in sorted(vars(args).items()) if k not in ("json", "command")}
        out = Output(args.json, args.command, params)
        code = COMMANDS[args.command](args, out)
    except UsageError as exc:
        return 2, "", f"usage error: {exc}\n"
    except (ParseError, CoordinateError, DimensionError, ValueError) as exc:
        return 2, "", f"usage error: {exc}\n"
    return code, out.emit(), ""


def main(argv: Optional[Sequence[str]] = None) -> int:
    code, stdout, stderr = run_command(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(stdout)
    sys.stderr.write(stderr)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
