"""``weakjordan`` command line: decompose a CSV curve, query a cone, or run the
seeded verification suites.

Exit codes: 0 pass, 1 verification failure, 2 input error, 3 domain error.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys

import numpy as np

from . import __version__
from .cone import build_cone, contains, leq
from .jordan import decompose
from .report import build_report, dumps, suite_report
from .suites import SUITES, run_suite
from .validation import (
    DimensionMismatchError,
    DomainError,
    Tolerance,
    check_nonzero,
    check_vector,
    norm_label,
    parse_norm,
)
from .weakrel import SampledCurve

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_DOMAIN = 3


class InputError(ValueError):
    pass


def parse_vector(text: str, name: str = "vector") -> np.ndarray:
    try:
        parts = [float(p) for p in text.split(",")]
    except ValueError:
        raise InputError(f"{name}: expected comma-separated reals, got {text!r}") from None
    v = np.array(parts)
    if not np.all(np.isfinite(v)):
        raise InputError(f"{name}: non-finite entry in {text!r}")
    return v


def parse_alpha(text: str):
    if text.strip().lower() == "auto":
        return None
    try:
        value = float(text)
    except ValueError:
        raise InputError(f"--alpha: expected 'auto' or a real, got {text!r}") from None
    if not math.isfinite(value):
        raise InputError("--alpha must be finite")
    return value


def parse_seed(text: str) -> int:
    try:
        seed = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 0 <= seed < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return seed


def _positive_int(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return n


def read_curve_csv(path) -> SampledCurve:
    """Read ``t,v1,...,vn`` rows; ``t`` must be strictly increasing."""
    try:
        with open(path, newline="") as fh:
            rows = list(csv.reader(fh))
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    rows = [r for r in rows if any(cell.strip() for cell in r)]
    if not rows:
        raise InputError(f"{path}: empty file")
    header = [h.strip() for h in rows[0]]
    expected = ["t"] + [f"v{i}" for i in range(1, len(header))]
    if len(header) < 2 or header != expected:
        raise InputError(f"{path}: header must be t,v1,...,vn; got {','.join(header)}")
    grid, values = [], []
    for r, row in enumerate(rows[1:], start=2):
        if len(row) != len(header):
            raise InputError(f"{path}: row {r} has {len(row)} columns, expected {len(header)}")
        parsed = []
        for c, cell in enumerate(row, start=1):
            try:
                x = float(cell)
            except ValueError:
                raise InputError(f"{path}: row {r}, column {c}: not a real number: {cell!r}") from None
            if not math.isfinite(x):
                raise InputError(f"{path}: row {r}, column {c}: non-finite value")
            parsed.append(x)
        grid.append(parsed[0])
        values.append(parsed[1:])
    if len(grid) < 2:
        raise InputError(f"{path}: need at least two data rows")
    for k in range(1, len(grid)):
        if grid[k] <= grid[k - 1]:
            raise InputError(
                f"{path}: t is not strictly increasing at node {k} (row {k + 2})"
            )
    return SampledCurve(np.array(grid), np.array(values))


def _tolerance(args) -> Tolerance:
    if args.tol is None:
        return Tolerance.from_env()
    if not (math.isfinite(args.tol) and args.tol > 0):
        raise InputError("--tol must be a positive real")
    return Tolerance(args.tol)


def _norm(args) -> float:
    try:
        return parse_norm(args.norm)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _x0(args, dim=None) -> np.ndarray:
    x0 = parse_vector(args.x0, "--x0")
    if dim is not None and x0.size != dim:
        raise InputError(f"--x0 has {x0.size} entries, curve has {dim} coordinates")
    return check_nonzero(check_vector(x0, name="x0"))


def _emit(report: dict, args) -> None:
    text = dumps(report)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_decompose(args) -> int:
    tol = _tolerance(args)
    p = _norm(args)
    alpha = parse_alpha(args.alpha)
    curve = read_curve_csv(args.input)
    x0 = _x0(args, curve.dim)
    res = decompose(curve, x0, p, alpha, tol)
    checks = {
        "residual": res.residual_ok,
        "f1_cone_increasing": res.f1_increasing,
        "f2_cone_increasing": res.f2_increasing,
        "wbv_bounds": res.wbv_ok,
    }
    results = {
        "grid": res.f.grid,
        "f1": res.f1.values,
        "f2": res.f2.values,
        "scalar_trace": res.scalar_trace.values,
        "variation": res.variation.values,
        "offset": res.offset,
        "cone": res.cone.to_dict(),
        "beta": res.beta,
        "wbv_bounds": [
            {
                "component": b.component,
                "probe": b.probe,
                "partition_sum": b.partition_sum,
                "bound": b.bound,
                "holds": b.holds,
            }
            for b in res.wbv_bounds
        ],
        "checks": checks,
        "verified": res.verified,
    }
    config = {
        "command": "decompose",
        "input": args.input,
        "x0": x0,
        "norm": norm_label(p),
        "alpha": "auto" if alpha is None else alpha,
        "tol": tol.eps,
    }
    failures = [name for name, ok in checks.items() if not ok]
    _emit(build_report(config, "decompose", results, {"weak_relation": res.residual}, failures), args)
    return EXIT_OK if res.verified else EXIT_FAIL


def cmd_cone(args) -> int:
    tol = _tolerance(args)
    p = _norm(args)
    alpha = parse_alpha(args.alpha)
    x0 = _x0(args)
    cone = build_cone(x0, p, alpha, tol)
    members = []
    for text in args.member or []:
        v = check_vector(parse_vector(text, "--member"), cone.dim, "member")
        members.append({"vector": v, "member": contains(cone, v, tol), "margin": cone.margin(v)})
    orders = []
    for a_text, b_text in args.leq or []:
        a = check_vector(parse_vector(a_text, "--leq"), cone.dim, "leq")
        b = check_vector(parse_vector(b_text, "--leq"), cone.dim, "leq")
        orders.append({"x": a, "y": b, "leq": leq(cone, a, b, tol)})
    config = {
        "command": "cone",
        "x0": x0,
        "norm": norm_label(p),
        "alpha": "auto" if alpha is None else alpha,
        "tol": tol.eps,
    }
    results = {"cone": cone.to_dict(), "members": members, "leq": orders}
    _emit(build_report(config, "cone", results, {}, []), args)
    return EXIT_OK


def cmd_verify(args) -> int:
    tol = _tolerance(args)
    if args.suite != "all" and args.suite not in SUITES:
        raise InputError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES + ('all',))}")
    results = run_suite(
        args.suite,
        seed=args.seed,
        cases=args.cases,
        dim=args.dim,
        tol=tol,
        inject_fault=args.inject_fault,
    )
    config = {
        "command": "verify",
        "suite": args.suite,
        "seed": args.seed,
        "dim": args.dim,
        "cases": args.cases,
        "tol": tol.eps,
        "inject_fault": args.inject_fault,
    }
    _emit(suite_report(config, args.suite, results), args)
    n_fail = sum(r.n_failures for r in results)
    print(f"verify {args.suite}: {n_fail} failure(s)", file=sys.stderr)
    return EXIT_OK if n_fail == 0 else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="weakjordan", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=None, help="eps of the comparison rule (default: $WEAKJORDAN_TOL or 1e-9)")
    common.add_argument("--output", "-o", default=None, help="write the JSON report here instead of stdout")

    geometry = argparse.ArgumentParser(add_help=False)
    geometry.add_argument("--x0", required=True, help='base vector, e.g. "1,0,2"')
    geometry.add_argument("--norm", default="p2", help="p1, p2, p3, pinf or p:<rational> (default p2)")
    geometry.add_argument("--alpha", default="auto", help="'auto' (= ||x0||) or a real in (0, ||x0||]")

    p = sub.add_parser("decompose", parents=[common, geometry], help="weak Jordan decomposition of a CSV curve")
    p.add_argument("--input", "-i", required=True, help="CSV with header t,v1,...,vn")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("cone", parents=[common, geometry], help="cone functional and membership/order queries")
    p.add_argument("--member", action="append", metavar="V", help="query vector (repeatable)")
    p.add_argument("--leq", action="append", nargs=2, metavar=("A", "B"), help="query A <= B (repeatable)")
    p.set_defaults(func=cmd_cone)

    p = sub.add_parser("verify", parents=[common], help="run a seeded property suite")
    p.add_argument("--suite", default="all", help=f"one of {', '.join(SUITES)}, all")
    p.add_argument("--seed", type=parse_seed, default=42)
    p.add_argument("--dim", type=_positive_int, default=None, help="fix the dimension (default: per-suite range)")
    p.add_argument("--cases", type=_positive_int, default=None, help="cases per suite (default: per-suite count)")
    p.add_argument("--inject-fault", action="store_true", help="break the lattice join to self-test the harness")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"weakjordan: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (InputError, DimensionMismatchError, ValueError) as exc:
        print(f"weakjordan: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
