"""Command-line interface.

Exit status: 0 success, 1 verification failed, 2 incompatible data
(including a field that violates the gauge),
3 parse or usage error, 4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import math
import sys
from typing import List, Optional, Sequence

from .antilaplacian import anti_laplacian
from .ellipsoid import Ellipsoid
from .errors import GaugeViolationError, IncompatibleDataError, InternalInvariantError, ParseError
from .formats import SolutionDocument, report_to_json, terms_to_json, to_latex
from .mri import PolyVectorField, electric_field
from .parser import parse_polynomial
from .poly import Polynomial, format_rational
from .quadrature import (
    ScaledIntegral,
    generalized_compatible,
    neumann_compatible,
    surface_integral,
    volume_integral,
)
from .solver import solve_generalized, solve_neumann

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INCOMPATIBLE = 2
EXIT_USAGE = 3
EXIT_INTERNAL = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--beta", help="ellipsoid coefficients, e.g. 3,1,2")
    common.add_argument("--dim", type=int, help="ambient dimension (inferred from --beta)")
    common.add_argument("--format", choices=("plain", "json", "latex"), default="plain")
    common.add_argument("--output", help="write output to this file instead of stdout")
    common.add_argument("--approx", action="store_true", help="also print float approximations")
    common.add_argument("--parallel", action="store_true",
                        help="solve independent linear blocks concurrently")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="neumann-ellipsoid", description=__doc__.splitlines()[1])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", parents=[common], help="solve the Neumann problem")
    p.add_argument("f")
    p.add_argument("--adjust-constant", action="store_true",
                   help="subtract the compatibility residual from f before solving")

    p = sub.add_parser("solve-general", parents=[common], help="solve with prescribed Laplacian g")
    p.add_argument("f")
    p.add_argument("g")

    p = sub.add_parser("antilaplacian", parents=[common], help="antiLaplacian of a polynomial")
    p.add_argument("g")

    p = sub.add_parser("integrate", parents=[common], help="exact surface or volume integral")
    p.add_argument("kind", choices=("surface", "volume"))
    p.add_argument("poly")

    p = sub.add_parser("check", parents=[common], help="compatibility residual")
    p.add_argument("f")
    p.add_argument("g", nargs="?")

    p = sub.add_parser("verify", parents=[common], help="re-check a JSON solution document")
    p.add_argument("path")

    p = sub.add_parser("mri-efield", parents=[common],
                       help="induced E-field from the components of -dA/dt")
    p.add_argument("components", nargs="+")
    p.add_argument("--sample", type=int, metavar="N",
                   help="emit CSV samples on an N-per-axis lattice inside the ellipsoid")
    p.add_argument("--csv", metavar="PATH", help="file for --sample output (default: stdout)")
    return parser


def _ellipsoid(args) -> Ellipsoid:
    if args.beta is None:
        raise UsageError("--beta is required for this command")
    try:
        e = Ellipsoid.parse(args.beta)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.dim is not None and args.dim != e.dim:
        raise UsageError(f"--dim {args.dim} disagrees with --beta of length {e.dim}")
    return e


def _dimension(args) -> int:
    if args.beta is not None:
        return _ellipsoid(args).dim
    if args.dim is None:
        raise UsageError("give --dim or --beta")
    if args.dim < 2:
        raise UsageError("--dim must be at least 2")
    return args.dim


def _render(p: Polynomial, fmt: str) -> str:
    return to_latex(p) if fmt == "latex" else p.to_text()


class _Output:
    def __init__(self, args, stdout):
        self.args = args
        self.stdout = stdout
        self.lines: List[str] = []

    def write(self, line: str = "") -> None:
        self.lines.append(line)

    def flush(self) -> None:
        text = "\n".join(self.lines) + ("\n" if self.lines else "")
        if self.args.output:
            with open(self.args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            self.stdout.write(text)


def _incompatible(exc: IncompatibleDataError, out: _Output, stderr) -> int:
    if out.args.format == "json":
        out.write(json.dumps({
            "error": "incompatible",
            "residual": format_rational(exc.residual),
            "adjusted_f": exc.adjusted_f.to_text(),
        }))
    else:
        out.write(f"residual: {format_rational(exc.residual)}")
        out.write(f"adjusted f: {exc.adjusted_f.to_text()}")
    stderr.write("error: boundary data is incompatible (see residual)\n")
    return EXIT_INCOMPATIBLE


def _emit_solution(sol, args, out: _Output, generalized: bool) -> None:
    if args.format == "json":
        out.write(SolutionDocument.from_solution(sol, generalized).to_json())
    else:
        out.write(_render(sol.h, args.format))


def cmd_solve(args, out, stderr) -> int:
    e = _ellipsoid(args)
    f = parse_polynomial(args.f, e.dim)
    if args.adjust_constant:
        f = f - neumann_compatible(e, f)
    try:
        sol = solve_neumann(e, f, parallel=args.parallel)
    except IncompatibleDataError as exc:
        return _incompatible(exc, out, stderr)
    _emit_solution(sol, args, out, generalized=False)
    return EXIT_OK


def cmd_solve_general(args, out, stderr) -> int:
    e = _ellipsoid(args)
    f = parse_polynomial(args.f, e.dim)
    g = parse_polynomial(args.g, e.dim)
    try:
        sol = solve_generalized(e, f, g, parallel=args.parallel)
    except IncompatibleDataError as exc:
        return _incompatible(exc, out, stderr)
    _emit_solution(sol, args, out, generalized=True)
    return EXIT_OK


def cmd_antilaplacian(args, out, stderr) -> int:
    n = _dimension(args)
    u = anti_laplacian(parse_polynomial(args.g, n))
    if args.format == "json":
        out.write(json.dumps({"dimension": n, "u": u.to_text(), "terms": terms_to_json(u)}))
    else:
        out.write(_render(u, args.format))
    return EXIT_OK


def cmd_integrate(args, out, stderr) -> int:
    e = _ellipsoid(args)
    p = parse_polynomial(args.poly, e.dim)
    result = surface_integral(e, p) if args.kind == "surface" else volume_integral(e, p)
    if args.format == "json":
        out.write(json.dumps({
            "kind": args.kind,
            "coefficient": format_rational(result.coefficient),
            "unit": result.unit_text(),
            "approx": result.approx(),
        }))
    else:
        out.write(str(result))
        out.write(f"≈ {result.approx():.17g}")
    return EXIT_OK


def cmd_check(args, out, stderr) -> int:
    e = _ellipsoid(args)
    f = parse_polynomial(args.f, e.dim)
    if args.g is None:
        residual = neumann_compatible(e, f)
    else:
        residual = generalized_compatible(e, f, parse_polynomial(args.g, e.dim))
    ok = residual == 0
    if args.format == "json":
        doc = {"residual": format_rational(residual), "compatible": ok}
        if not ok:
            doc["adjusted_f"] = (f - residual).to_text()
        out.write(json.dumps(doc))
    else:
        out.write(f"residual: {format_rational(residual)}")
        if args.approx:
            out.write(f"residual integral ≈ {ScaledIntegral(residual, e).approx():.17g}")
        out.write(f"compatible: {'yes' if ok else 'no'}")
        if not ok:
            out.write(f"adjusted f: {(f - residual).to_text()}")
    return EXIT_OK if ok else EXIT_INCOMPATIBLE


def cmd_verify(args, out, stderr) -> int:
    try:
        with open(args.path, encoding="utf-8") as fh:
            doc = SolutionDocument.from_json(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {args.path}: {exc}") from None
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"malformed solution document: {exc}") from None
    report = doc.verify()
    result = report_to_json(report)
    result["certificate_ok"] = doc.certificate_holds()
    result["ok"] = report.ok
    if doc.report and doc.report != report_to_json(report):
        result["stored_report_matches"] = False
    if args.format == "json":
        out.write(json.dumps(result))
    else:
        for key, value in result.items():
            out.write(f"{key}: {'true' if value else 'false'}")
    return EXIT_OK if report.ok else EXIT_VERIFY_FAILED


def _lattice_samples(e: Ellipsoid, field: PolyVectorField, n_per_axis: int):
    """Rows of (x..., E..., |E|) on a uniform lattice strictly inside E."""
    n = e.dim
    if n_per_axis < 1:
        raise UsageError("--sample needs a positive count")
    axes = []
    for b in e.beta:
        half = 1 / math.sqrt(float(b))
        if n_per_axis == 1:
            axes.append([0.0])
        else:
            axes.append([-half + 2 * half * i / (n_per_axis - 1) for i in range(n_per_axis)])
    for point in itertools.product(*axes):
        if sum(float(b) * x * x for b, x in zip(e.beta, point)) >= 1:
            continue
        values = [c.evaluate_float(point) for c in field]
        yield list(point) + values + [math.sqrt(sum(w * w for w in values))]


def cmd_mri_efield(args, out, stderr) -> int:
    e = _ellipsoid(args)
    if len(args.components) != e.dim:
        raise UsageError(f"expected {e.dim} field components, got {len(args.components)}")
    neg_dadt = PolyVectorField(tuple(parse_polynomial(s, e.dim) for s in args.components))
    try:
        v, field = electric_field(e, -neg_dadt, parallel=args.parallel)
    except GaugeViolationError as exc:
        stderr.write("error: the field is not divergence free (Coulomb gauge violated)\n")
        out.write(f"divergence: {(-exc.divergence).to_text()}")
        return EXIT_INCOMPATIBLE

    if args.sample is not None:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        n = e.dim
        writer.writerow([f"x{i + 1}" for i in range(n)] + [f"E{i + 1}" for i in range(n)] + ["|E|"])
        for row in _lattice_samples(e, field, args.sample):
            writer.writerow([f"{x:.17g}" for x in row])
        if args.csv:
            with open(args.csv, "w", encoding="utf-8") as fh:
                fh.write(buf.getvalue())
        else:
            out.write(buf.getvalue().rstrip("\n"))
            return EXIT_OK

    if args.format == "json":
        out.write(json.dumps({"V": v.to_text(), "E": [c.to_text() for c in field]}))
    else:
        out.write(f"V = {_render(v, args.format)}")
        for i, c in enumerate(field):
            out.write(f"E{i + 1} = {_render(c, args.format)}")
    return EXIT_OK


COMMANDS = {
    "solve": cmd_solve,
    "solve-general": cmd_solve_general,
    "antilaplacian": cmd_antilaplacian,
    "integrate": cmd_integrate,
    "check": cmd_check,
    "verify": cmd_verify,
    "mri-efield": cmd_mri_efield,
}


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    """Run the CLI and return its exit status."""
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    out = _Output(args, stdout)
    try:
        status = COMMANDS[args.command](args, out, stderr)
    except (UsageError, ParseError) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except InternalInvariantError as exc:
        stderr.write(f"internal error: {exc}\n")
        return EXIT_INTERNAL
    out.flush()
    return status


def main() -> None:
    sys.exit(run())
