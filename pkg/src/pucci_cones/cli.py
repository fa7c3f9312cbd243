"""Command-line front end: ``pucci-cones <command> [options]``.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Sequence

import numpy as np

from . import __version__
from . import special_functions as sf
from .analysis import (
    bound_suite, build_supersolution, identity_suite, liouville_classify, monotonicity_suite,
    residual_suite,
)
from .errors import PucciConesError
from .exponents import DEFAULT_TOL, ConeProblem, exponent_residuals, solve_exponents
from .field import HomogeneousSolution
from .profiles import ProfileKind, make_profile

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
THREADS_ENV = "PUCCI_CONES_THREADS"
FORMATS = ("csv", "json", "table")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class OutputSpec:
    format: str = "table"
    path: str | None = None
    precision: int = 12

    def __post_init__(self):
        if self.format not in FORMATS:
            raise UsageError(f"format must be one of {', '.join(FORMATS)}")
        if not 4 <= self.precision <= 17:
            raise UsageError("precision must lie in [4, 17]")


def format_float(x: float, precision: int) -> str:
    """Shortest decimal (at most ``precision`` significant digits) reading back closest to ``x``."""
    x = float(x) + 0.0  # no signed zero
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    for k in range(1, precision + 1):
        s = f"{x:.{k}g}"
        if float(s) == x:
            break
    else:
        k, s = precision, f"{x:.{precision}g}"
    # keep moderate magnitudes positional ("10" rather than "1e+01")
    if "e" in s and -5 <= math.floor(math.log10(abs(x))) < 16:
        s = np.format_float_positional(x, precision=k, unique=False, fractional=False, trim="-")
    return s


def _round(value: Any, precision: int) -> Any:
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, (float, np.floating)):
        v = float(value)
        return float(format_float(v, precision)) if math.isfinite(v) else None
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, dict):
        return {k: _round(v, precision) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_round(v, precision) for v in value]
    return value


def _cell(value: Any, precision: int) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (float, np.floating, int, np.integer)):
        return format_float(float(value), precision)
    return str(value)


@dataclass
class Result:
    """What a command produced: tabular rows plus metadata for JSON output."""

    columns: list[str]
    rows: list[list[Any]]
    problem: dict | None = None
    residuals: dict | None = None
    extra: dict | None = None
    tolerances: dict | None = None
    summary: str | None = None
    exit_code: int = EXIT_OK

    def render(self, spec: OutputSpec, command: str) -> str:
        p = spec.precision
        if spec.format == "json":
            results: Any = self.extra if self.extra is not None else [dict(zip(self.columns, r)) for r in self.rows]
            doc = {
                "problem": self.problem,
                "results": results,
                "residuals": self.residuals or {},
                "meta": {"version": __version__, "command": command, "tolerances": self.tolerances or {}},
            }
            return json.dumps(_round(doc, p), indent=2) + "\n"
        if spec.format == "csv":
            buf = io.StringIO()
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(self.columns)
            for r in self.rows:
                writer.writerow([_cell(v, p) for v in r])
            return buf.getvalue()
        cells = [self.columns] + [[_cell(v, p) for v in r] for r in self.rows]
        widths = [max(len(row[i]) for row in cells) for i in range(len(self.columns))]
        lines = ["  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in cells]
        lines.insert(1, "  ".join("-" * w for w in widths))
        if self.summary:
            lines.append(self.summary)
        return "\n".join(lines) + "\n"


def _threads() -> int:
    raw = os.environ.get(THREADS_ENV, "").strip()
    if not raw:
        return 1
    try:
        n = int(raw)
    except ValueError:
        raise UsageError(f"{THREADS_ENV} must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise UsageError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    return n


def _ordered_map(fn: Callable, items: Sequence) -> list:
    """``map`` in input order, threaded when the environment allows it."""
    n = _threads()
    if n == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))


# --------------------------------------------------------------------------- #
# argument helpers
# --------------------------------------------------------------------------- #

def _angle(args, value: float) -> float:
    return math.radians(value) if args.degrees else float(value)


def _problem(args) -> ConeProblem:
    has_pair = args.lam is not None or args.Lam is not None
    if args.omega is not None and has_pair:
        raise UsageError("give either --omega or --lambda/--Lambda, not both")
    if args.theta0 is None:
        raise UsageError("--theta0 is required")
    theta0 = _angle(args, args.theta0)
    if args.omega is not None:
        return ConeProblem.from_omega(args.omega, theta0)
    if not has_pair:
        raise UsageError("ellipticity missing: give --omega or --lambda and --Lambda")
    lam = 1.0 if args.lam is None else args.lam
    if args.Lam is None:
        raise UsageError("--Lambda is required together with --lambda")
    return ConeProblem(lam, args.Lam, theta0)


def _problem_dict(problem: ConeProblem) -> dict:
    return {"lambda": problem.lam, "Lambda": problem.Lam, "omega": problem.omega, "theta0": problem.theta0}


def _float_list(text: str, what: str) -> list[float]:
    try:
        vals = [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"{what} must be a comma-separated list of numbers") from None
    if not vals:
        raise UsageError(f"{what} is empty")
    return vals


def _theta_grid(args, theta0: float) -> np.ndarray:
    if args.theta_grid is not None:
        return np.array([_angle(args, t) for t in _float_list(args.theta_grid, "--theta-grid")])
    if args.theta_samples < 1:
        raise UsageError("--theta-samples must be positive")
    return np.linspace(-theta0, theta0, args.theta_samples) if args.theta_samples > 1 else np.zeros(1)


# --------------------------------------------------------------------------- #
# commands
# --------------------------------------------------------------------------- #

def cmd_exponents(args) -> Result:
    problem = _problem(args)
    exps = solve_exponents(problem, args.tol)
    res = exponent_residuals(problem, exps)
    rows = [[name, value, res[name]] for name, value in exps.as_dict().items()]
    return Result(["name", "value", "residual"], rows, problem=_problem_dict(problem),
                  residuals=res, extra=exps.as_dict(), tolerances={"tol": args.tol})


def cmd_curves(args) -> Result:
    omega = sf.check_omega(args.omega)
    if not (math.isfinite(args.alpha_min) and math.isfinite(args.alpha_max)) or args.alpha_min >= args.alpha_max:
        raise UsageError("need finite --alpha-min < --alpha-max")
    if args.samples < 2:
        raise UsageError("--samples must be at least 2")
    fn = sf.eval_g if args.function == "g" else sf.eval_h
    alphas = np.linspace(args.alpha_min, args.alpha_max, args.samples)

    def row(a):
        try:
            return [float(a), fn(omega, float(a))]
        except sf.DomainError:
            return [float(a), None]

    rows = _ordered_map(row, list(alphas))
    return Result(["alpha", "value"], rows, problem={"omega": omega, "function": args.function})


def cmd_profile(args) -> Result:
    problem = _problem(args)
    if args.samples < 2:
        raise UsageError("--samples must be at least 2")
    prof = make_profile(problem, ProfileKind.parse(args.kind), args.tol)
    theta = np.linspace(-problem.theta0, problem.theta0, args.samples)
    p, d1, d2 = prof.evaluate(theta)
    # the closed formula gives 0 at the endpoints up to rounding; report it exactly
    p = np.where(np.abs(theta) == problem.theta0, 0.0, p)
    rows = [[float(t), float(a), float(b), float(c)] for t, a, b, c in zip(theta, p, d1, d2)]
    info = _problem_dict(problem) | {"kind": prof.kind.value, "exponent": prof.exponent}
    return Result(["theta", "phi", "phi_d1", "phi_d2"], rows, problem=info)


def cmd_field(args) -> Result:
    problem = _problem(args)
    sol = HomogeneousSolution(problem, ProfileKind.parse(args.kind), args.tol)
    rho = _float_list(args.rho_grid, "--rho-grid")
    theta = _theta_grid(args, problem.theta0)
    points = [(r, t) for r in rho for t in theta]
    samples = _ordered_map(lambda pt: sol.sample(*pt), points)
    rows, worst = [], 0.0
    for s in samples:
        x, y = s.rho * math.sin(s.theta), s.rho * math.cos(s.theta)
        nres = s.normalized_residual
        if abs(s.theta) < problem.theta0:
            worst = max(worst, nres)
        rows.append([s.rho, s.theta, x, y, s.value, s.gradient[0], s.gradient[1],
                     s.hess_eigs[0], s.hess_eigs[1], s.pucci_minus, s.pucci_plus, nres])
    cols = ["rho", "theta", "x", "y", "value", "grad_x", "grad_y", "lambda_1", "lambda_2",
            "pucci_minus", "pucci_plus", "normalized_residual"]
    info = _problem_dict(problem) | {"kind": sol.kind.value, "exponent": sol.exponent}
    return Result(cols, rows, problem=info, residuals={"max_normalized_residual": worst},
                  summary=f"max normalized residual (interior points): {format_float(worst, 6)}")


def cmd_liouville(args) -> Result:
    problem = _problem(args)
    verdict = liouville_classify(problem, args.p, args.tol)
    doc = {"verdict": verdict.as_dict()}
    rows = [[k, v if not isinstance(v, list) else f"[{v[0]}, {v[1]}]"] for k, v in verdict.as_dict().items()]
    code = EXIT_OK
    residuals = {}
    if args.witness:
        if verdict.nonexistence:
            raise UsageError("p lies in the critical interval: no supersolution exists to witness")
        witness, sol = build_supersolution(problem, args.p, args.tol)
        summary = sol.verify()
        doc["witness"] = witness.as_dict()
        doc["verification"] = {"n_points": summary.n_points, "passed": summary.passed,
                               "max_normalized_margin": summary.max_normalized_margin}
        residuals = {"max_normalized_margin": summary.max_normalized_margin}
        rows += [[f"witness.{k}", v] for k, v in witness.as_dict().items() if not isinstance(v, list)]
        rows += [["verification.passed", summary.passed],
                 ["verification.max_normalized_margin", summary.max_normalized_margin]]
        code = EXIT_OK if summary.passed else EXIT_FAILED
    return Result(["key", "value"], rows, problem=_problem_dict(problem), residuals=residuals,
                  extra=doc, exit_code=code)


def cmd_verify(args) -> Result:
    omega = sf.check_omega(args.omega)
    theta0 = _angle(args, args.theta0)
    problem = ConeProblem.from_omega(omega, theta0)
    suites = ["identities", "residuals", "bounds", "monotonicity"] if args.suite == "all" else [args.suite]
    runners = {
        "identities": lambda: identity_suite(omega, args.samples, args.seed),
        "residuals": lambda: residual_suite(problem, args.samples, args.seed),
        "bounds": lambda: bound_suite(omega),
        "monotonicity": lambda: monotonicity_suite(problem),
    }
    reports = [runners[name]() for name in suites]
    rows = [[rep.name, c.name, c.value, c.tolerance, c.passed] for rep in reports for c in rep.checks]
    ok = all(rep.passed for rep in reports)
    return Result(["suite", "check", "value", "tolerance", "passed"], rows,
                  problem=_problem_dict(problem), extra=[rep.as_dict() for rep in reports],
                  residuals={c.name: c.value for rep in reports for c in rep.checks},
                  summary="PASS" if ok else "FAIL", exit_code=EXIT_OK if ok else EXIT_FAILED)


# --------------------------------------------------------------------------- #
# parser
# --------------------------------------------------------------------------- #

def _add_output(p: argparse.ArgumentParser, default: str) -> None:
    p.add_argument("--format", choices=FORMATS, default=default)
    p.add_argument("--output", "-o", default=None, help="write to this file instead of stdout")
    p.add_argument("--precision", type=int, default=12, help="significant digits, 4..17 (default 12)")


def _add_problem(p: argparse.ArgumentParser) -> None:
    p.add_argument("--lambda", dest="lam", type=float, default=None)
    p.add_argument("--Lambda", dest="Lam", type=float, default=None)
    p.add_argument("--omega", type=float, default=None, help="Lambda/lambda (sets lambda = 1)")
    p.add_argument("--theta0", type=float, default=None, help="cone half-opening")
    p.add_argument("--degrees", action="store_true", help="angles given in degrees (output stays in radians)")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pucci-cones",
        description="Homogeneous solutions of the Pucci extremal equations in planar cones.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("exponents", help="the four homogeneity exponents of a cone")
    _add_problem(p)
    _add_output(p, "table")
    p.set_defaults(func=cmd_exponents)

    p = sub.add_parser("curves", help="g_w or h_w sampled on an exponent range")
    p.add_argument("--omega", type=float, required=True)
    p.add_argument("--function", choices=("g", "h"), default="g")
    p.add_argument("--alpha-min", type=float, required=True)
    p.add_argument("--alpha-max", type=float, required=True)
    p.add_argument("--samples", type=int, default=101)
    _add_output(p, "csv")
    p.set_defaults(func=cmd_curves)

    p = sub.add_parser("profile", help="angular profile and its derivatives on [-theta0, theta0]")
    _add_problem(p)
    p.add_argument("--kind", default="phi+", help="phi+, phi-, psi+ or psi-")
    p.add_argument("--samples", type=int, default=101)
    _add_output(p, "csv")
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("field", help="solution samples with Hessian eigenvalues and Pucci residuals")
    _add_problem(p)
    p.add_argument("--kind", default="phi+")
    p.add_argument("--rho-grid", default="0.5,1,2", help="comma-separated radii")
    p.add_argument("--theta-grid", default=None, help="comma-separated angles")
    p.add_argument("--theta-samples", type=int, default=9,
                   help="uniform angles spanning [-theta0, theta0] when --theta-grid is not given")
    _add_output(p, "csv")
    p.set_defaults(func=cmd_field)

    p = sub.add_parser("liouville", help="existence of positive solutions of M^-(D^2u) + u^p <= 0")
    _add_problem(p)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--witness", action="store_true", help="construct and verify an explicit supersolution")
    _add_output(p, "json")
    p.set_defaults(func=cmd_liouville)

    p = sub.add_parser("verify", help="run the invariant suites")
    p.add_argument("--suite", choices=("identities", "residuals", "bounds", "monotonicity", "all"), default="all")
    p.add_argument("--omega", type=float, default=2.0)
    p.add_argument("--theta0", type=float, default=1.0)
    p.add_argument("--degrees", action="store_true")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    _add_output(p, "table")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Iterable[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(None if argv is None else list(argv))
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_USAGE
    try:
        spec = OutputSpec(args.format, args.output, args.precision)
        result = args.func(args)
        text = result.render(spec, args.command)
    except (UsageError, PucciConesError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if spec.path:
        with open(spec.path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if result.summary and spec.format != "table":
        print(result.summary, file=sys.stderr)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
