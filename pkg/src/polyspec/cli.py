"""Command-line interface.

Subcommands:

* ``zeros``     print positive Bessel-function zeros
* ``spectrum``  enumerate and group the spectrum below a cutoff
* ``bottom``    closed-form bottom of the spectrum and its minimizer
* ``verify``    run the built-in verification suites
* ``oracle``    expose the finite-difference radial eigenvalue oracle
* ``inverse``   expand a sampled coefficient grid and apply the operator
                or its inverse

Output is deterministic byte for byte for identical flags: floats are
serialized with 17 significant digits (lossless for doubles), orderings
are canonical, and JSON is emitted by a fixed-layout writer.  Exit codes:
0 success, 2 flag/usage errors, 3 domain/range errors, 1 failed
verification.
"""

from __future__ import annotations

import argparse
import math
import sys

from . import __version__
from .errors import (
    InvalidArgumentError,
    OracleInsufficientError,
    PolyspecError,
    UnsupportedRangeError,
)
from .gridfile import read_grid
from .selfcheck import SUITES, run_suites
from .spectral_ops import apply_box, apply_inverse, expand_from_samples
from .spectrum import EigenMode, Polydisc, SpectralPoint, assemble_spectrum, bottom
from .verify import BoundaryCondition, FdConfig, fd_radial_eigs
from .zeros import ZeroCache

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_FAILED_CHECK = 1
EXIT_USAGE = 2
EXIT_RANGE = 3


# ---------------------------------------------------------------------------
# deterministic serialization
# ---------------------------------------------------------------------------

def _fmt_float(v: float) -> str:
    """17 significant digits: lossless round-trip for IEEE doubles."""
    if math.isnan(v) or math.isinf(v):
        raise InvalidArgumentError("non-finite value in output")
    return format(float(v), ".17g")


def _json(value, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(value, dict):
        if not value:
            return "{}"
        rows = [
            f'{pad}  "{k}": {_json(v, indent + 1)}' for k, v in value.items()
        ]
        return "{\n" + ",\n".join(rows) + "\n" + pad + "}"
    if isinstance(value, (list, tuple)):
        if not value:
            return "[]"
        rows = [f"{pad}  {_json(v, indent + 1)}" for v in value]
        return "[\n" + ",\n".join(rows) + "\n" + pad + "]"
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "null"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return _fmt_float(value)
    if isinstance(value, str):
        escaped = value.replace("\\", "\\\\").replace('"', '\\"')
        return f'"{escaped}"'
    raise InvalidArgumentError(f"unserializable value {value!r}")


def _factor_record(f) -> dict:
    return {
        "kind": f.kind.value,
        "angular_order": f.angular_order,
        "radial_index": f.radial_index,
        "radius": f.radius,
        "lambda": f.lambda_k,
    }


def _mode_record(m: EigenMode) -> dict:
    return {
        "J": list(m.J),
        "value": m.value,
        "family": m.family,
        "infinite_family": m.has_holomorphic,
        "factors": [_factor_record(f) for f in m.factors],
    }


def _point_record(p: SpectralPoint) -> dict:
    return {
        "value": p.value,
        "finite_multiplicity": p.finite_multiplicity,
        "infinite": p.infinite,
        "families": list(p.families),
        "witnesses": [_mode_record(m) for m in p.witnesses],
    }


def _spectrum_record(P: Polydisc, q: int, args, points: list[SpectralPoint]) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "request": {
            "radii": list(P.radii),
            "q": q,
            "max_lambda": args.max,
            "group_tol": args.group_tol,
            "witnesses": args.witnesses,
        },
        "points": [_point_record(p) for p in points],
    }


# ---------------------------------------------------------------------------
# flag parsing helpers
# ---------------------------------------------------------------------------

def _parse_radii(parser: argparse.ArgumentParser, text: str) -> tuple[float, ...]:
    try:
        radii = tuple(float(x) for x in text.split(","))
    except ValueError:
        parser.error(f"--radii: cannot parse {text!r} as comma-separated reals")
    if len(radii) < 2:
        parser.error("--radii: need at least two radii")
    return radii


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_zeros(args, out) -> int:
    cache = ZeroCache(width_tol=args.tol)
    values = [cache.zero(args.order, j) for j in range(1, args.count + 1)]
    if args.format == "json":
        out.write(_json({"order": args.order, "count": args.count, "zeros": values}) + "\n")
    elif args.format == "csv":
        out.write("order,index,value\n")
        for j, v in enumerate(values, start=1):
            out.write(f"{args.order},{j},{_fmt_float(v)}\n")
    else:
        for j, v in enumerate(values, start=1):
            out.write(f"lambda({args.order},{j}) = {_fmt_float(v)}\n")
    return EXIT_OK


def _cmd_spectrum(args, out) -> int:
    P = Polydisc(args.radii)
    cache = ZeroCache()
    points = assemble_spectrum(
        P, args.q, args.max, group_tol=args.group_tol, cache=cache, witness_cap=args.witnesses
    )
    if args.format == "json":
        out.write(_json(_spectrum_record(P, args.q, args, points)) + "\n")
    elif args.format == "csv":
        out.write("value,finite_multiplicity,infinite,family\n")
        for p in points:
            fam = "+".join(p.families)
            out.write(
                f"{_fmt_float(p.value)},{p.finite_multiplicity},"
                f"{'true' if p.infinite else 'false'},{fam}\n"
            )
    else:
        out.write(f"spectrum on radii {list(P.radii)}, q={args.q}, cutoff {args.max}\n")
        for p in points:
            mult = "inf" if p.infinite else str(p.finite_multiplicity)
            extra = f" (+{p.finite_multiplicity} finite)" if p.infinite and p.finite_multiplicity else ""
            out.write(
                f"  {_fmt_float(p.value):<24} multiplicity {mult}{extra}  "
                f"[{'+'.join(p.families)}]\n"
            )
    return EXIT_OK


def _cmd_bottom(args, out) -> int:
    P = Polydisc(args.radii)
    cache = ZeroCache()
    value, J = bottom(P, args.q, cache)
    if args.format == "json":
        out.write(_json({"value": value, "J": list(J)}) + "\n")
    else:
        out.write(f"bottom = {_fmt_float(value)} at J = {list(J)}\n")
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    reports = run_suites(names, seed=args.seed)
    record = {
        "schema_version": SCHEMA_VERSION,
        "seed": args.seed,
        "passed": all(r["passed"] for r in reports),
        "suites": reports,
    }
    if args.format == "json":
        out.write(_json(record) + "\n")
    else:
        for r in reports:
            for c in r["checks"]:
                mark = "PASS" if c["passed"] else "FAIL"
                detail = f"  ({c['detail']})" if c["detail"] else ""
                out.write(f"[{mark}] {r['suite']}: {c['name']}{detail}\n")
    if not record["passed"]:
        failing = [
            f"{r['suite']}: {c['name']}"
            for r in reports
            for c in r["checks"]
            if not c["passed"]
        ]
        print(f"verification failed: {failing[0]}", file=sys.stderr)
        return EXIT_FAILED_CHECK
    return EXIT_OK


def _cmd_oracle(args, out) -> int:
    bc = BoundaryCondition(args.bc)
    cfg = FdConfig(args.grid, args.radius, args.order, bc)
    values = fd_radial_eigs(cfg, args.count)
    record = {
        "config": {
            "grid_points": args.grid,
            "radius": args.radius,
            "angular_order": args.order,
            "bc": bc.value,
        },
        "eigenvalues": values,
    }
    if args.format == "json":
        out.write(_json(record) + "\n")
    else:
        for i, v in enumerate(values):
            out.write(f"eig[{i}] = {_fmt_float(v)}\n")
    return EXIT_OK


def _cmd_inverse(args, out) -> int:
    n, q, counts, samples = read_grid(args.input)
    P = Polydisc(args.radii)
    if n != P.n:
        raise InvalidArgumentError(f"grid file has n={n}, flags give n={P.n}")
    if q != args.q:
        raise InvalidArgumentError(f"grid file has q={q}, flags give q={args.q}")
    radial = {c[0] for c in counts}
    angular = {c[1] for c in counts}
    if len(radial) != 1 or len(angular) != 1:
        raise InvalidArgumentError("per-variable node counts must agree across variables")
    try:
        J = tuple(int(x) for x in str(args.J).split(","))
    except ValueError:
        raise InvalidArgumentError(f"--J: cannot parse {args.J!r} as comma-separated integers")
    cache = ZeroCache()
    x = expand_from_samples(
        samples,
        P,
        q,
        J,
        args.max_lambda,
        cache,
        quad_nodes=radial.pop(),
        angular_nodes=angular.pop(),
        p_max=args.p_max,
    )
    if args.op == "inverse":
        x = apply_inverse(x)
    elif args.op == "box":
        x = apply_box(x)
    record = {
        "schema_version": SCHEMA_VERSION,
        "op": args.op,
        "J": list(x.J),
        "truncation_lambda": x.truncation_lambda,
        "terms": [
            {
                "mode": _mode_record(m),
                "coeff_re": c.real,
                "coeff_im": c.imag,
            }
            for m, c in x.terms
        ],
    }
    text = _json(record) + "\n"
    if args.output and args.output != "-":
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyspec",
        description="Spectrum of the dbar-Neumann Laplacian on polydiscs.",
    )
    parser.add_argument("--version", action="version", version=f"polyspec {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    fmt = {"choices": ("json", "csv", "table"), "default": "json"}

    p = sub.add_parser("zeros", help="positive zeros of J_m")
    p.add_argument("--order", type=int, required=True, help="Bessel order m (sign ignored)")
    p.add_argument("--count", type=int, required=True, help="number of zeros to print")
    p.add_argument(
        "--tol",
        type=float,
        default=1e-13,
        help="relative enclosure width accepted by bisection (default: %(default)g)",
    )
    p.add_argument("--format", **fmt, help="output format (default: %(default)s)")
    p.set_defaults(func=_cmd_zeros)

    p = sub.add_parser("spectrum", help="enumerate and group the spectrum")
    p.add_argument("--radii", required=True, help="comma-separated polydisc radii, n >= 2")
    p.add_argument("--q", type=int, required=True, help="form degree, 1 <= q <= n-1")
    p.add_argument("--max", type=float, required=True, help="eigenvalue cutoff")
    p.add_argument(
        "--group-tol",
        type=float,
        default=1e-11,
        help="relative grouping tolerance (default: %(default)g)",
    )
    p.add_argument(
        "--witnesses",
        type=int,
        default=8,
        help="max witness modes stored per spectral point (default: %(default)s)",
    )
    p.add_argument("--format", **fmt, help="output format (default: %(default)s)")
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("bottom", help="closed-form bottom of the spectrum")
    p.add_argument("--radii", required=True, help="comma-separated polydisc radii")
    p.add_argument("--q", type=int, required=True, help="form degree")
    p.add_argument("--format", choices=("json", "table"), default="json",
                   help="output format (default: %(default)s)")
    p.set_defaults(func=_cmd_bottom)

    p = sub.add_parser("verify", help="run built-in verification suites")
    p.add_argument(
        "--suite",
        choices=sorted(SUITES) + ["all"],
        default="all",
        help="suite to run (default: %(default)s)",
    )
    p.add_argument("--seed", type=int, default=0, help="sampling seed (default: %(default)s)")
    p.add_argument("--format", choices=("json", "table"), default="json",
                   help="output format (default: %(default)s)")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("oracle", help="independent oracles")
    oracle_sub = p.add_subparsers(dest="oracle_kind", required=True)
    pf = oracle_sub.add_parser("fd", help="finite-difference radial eigenvalues")
    pf.add_argument("--order", type=int, required=True, help="angular order m (signed)")
    pf.add_argument(
        "--bc",
        choices=[bc.value for bc in BoundaryCondition],
        required=True,
        help="outer boundary condition",
    )
    pf.add_argument("--grid", type=int, default=2000,
                    help="radial grid points (default: %(default)s)")
    pf.add_argument("--count", type=int, default=3,
                    help="number of eigenvalues (default: %(default)s)")
    pf.add_argument("--radius", type=float, default=1.0,
                    help="disc radius (default: %(default)s)")
    pf.add_argument("--format", choices=("json", "table"), default="json",
                    help="output format (default: %(default)s)")
    pf.set_defaults(func=_cmd_oracle)

    p = sub.add_parser(
        "inverse", help="expand a sampled grid and apply the operator or its inverse"
    )
    p.add_argument("--input", required=True, help="PSPC sampled-grid file")
    p.add_argument("--radii", required=True, help="comma-separated polydisc radii")
    p.add_argument("--q", type=int, required=True, help="form degree")
    p.add_argument("--J", required=True, help="comma-separated q-tuple of variable indices")
    p.add_argument("--max-lambda", type=float, required=True, help="expansion truncation")
    p.add_argument(
        "--p-max",
        type=int,
        default=16,
        help="largest materialized monomial exponent (default: %(default)s)",
    )
    p.add_argument(
        "--op",
        choices=("inverse", "box", "none"),
        default="inverse",
        help="transformation to apply to the expansion (default: %(default)s)",
    )
    p.add_argument("--output", default="-", help="output path, '-' for stdout (default)")
    p.set_defaults(func=_cmd_inverse)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if hasattr(args, "radii"):
        args.radii = _parse_radii(parser, args.radii)
    try:
        return args.func(args, sys.stdout)
    except (UnsupportedRangeError, InvalidArgumentError, OracleInsufficientError) as exc:
        print(f"polyspec: {exc}", file=sys.stderr)
        return EXIT_RANGE
    except PolyspecError as exc:
        print(f"polyspec: internal error: {exc}", file=sys.stderr)
        return EXIT_RANGE
    except OSError as exc:
        print(f"polyspec: {exc}", file=sys.stderr)
        return EXIT_RANGE


if __name__ == "__main__":
    sys.exit(main())
