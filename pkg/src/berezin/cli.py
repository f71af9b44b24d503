"""Command-line front end.

Subcommands: coeffs, verify, transform, kernel, symbol, serve.  Every output
is machine-readable (JSON or CSV) and deterministic: rationals print exactly
as p/q, floats with 17 significant digits.  Exit codes: 0 success, 1
verification or accuracy failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

import numpy as np

from .kernel import CPoint, reproducing_kernel
from .suites import SUITE_NAMES, run_suite
from .symbols import SpaceParams, SymbolRep, coeff_table, convention_report, hhat
from .transform import (
    DIRECT_MARGIN,
    BoundaryMarginError,
    GridFunction2D,
    berezin_direct,
    berezin_spectral,
    load_grid,
    save_grid,
)

M_MAX = 64  # exact-arithmetic cost guard for coefficient tables


class UsageError(Exception):
    pass


def _json_text(obj, indent=0) -> str:
    """JSON with fixed 17-significant-digit floats and p/q rationals."""
    pad = "  " * indent
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return format(obj, ".17g")
    if isinstance(obj, Fraction):
        return json.dumps(str(obj))
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        inner = ",\n".join(
            f"{pad}  {json.dumps(str(k))}: {_json_text(v, indent + 1)}" for k, v in obj.items()
        )
        return "{\n" + inner + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        inner = ",\n".join(f"{pad}  {_json_text(v, indent + 1)}" for v in obj)
        return "[\n" + inner + "\n" + pad + "]"
    raise TypeError(f"cannot serialize {type(obj)!r}")


def _emit(obj) -> None:
    print(_json_text(obj))


def _parse_params(args) -> SpaceParams:
    if args.n < 1 or args.m < 0:
        raise UsageError(f"invalid parameters n={args.n}, m={args.m}")
    if args.m > M_MAX:
        raise UsageError(f"m={args.m} exceeds the exact-arithmetic guard m <= {M_MAX}")
    return SpaceParams(args.n, args.m)


def cmd_coeffs(args) -> int:
    params = _parse_params(args)
    table = coeff_table(params)
    report = convention_report(params)
    if args.format == "json":
        _emit(
            {
                "params": {"n": params.n, "m": params.m},
                "families": {
                    "gamma": [str(v) for v in table.gamma],
                    "sigma": [str(v) for v in table.sigma],
                    "c": [str(v) for v in table.c],
                    "kappa": [str(v) for v in table.kappa],
                },
                "report": report.to_json_obj(),
            }
        )
    else:
        verdicts = ";".join(f"{f.family}={f.verdict}" for f in report.families)
        print("j,gamma,sigma,c,kappa,verdict")
        for j in range(2 * params.m + 1):
            print(f"{j},{table.gamma[j]},{table.sigma[j]},{table.c[j]},{table.kappa[j]},{verdicts}")
    return 0


def cmd_verify(args) -> int:
    try:
        report = run_suite(args.suite, n=args.n, m=args.m, tol=args.tol)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _emit(report)
    return 0 if report["pass"] else 1


def cmd_kernel(args) -> int:
    params = _parse_params(args)
    if len(args.z) != 2 * params.n or len(args.w) != 2 * params.n:
        raise UsageError(
            f"--z and --w need exactly {2 * params.n} real coordinates for n={params.n}"
        )
    value = reproducing_kernel(params, CPoint.from_reals(args.z), CPoint.from_reals(args.w))
    _emit({"value": {"re": value.real, "im": value.imag}})
    return 0


def cmd_symbol(args) -> int:
    params = _parse_params(args)
    if args.xi_norm < 0:
        raise UsageError("--xi-norm must be >= 0")
    _emit({"value": hhat(params, args.xi_norm**2)})
    return 0


def cmd_transform(args) -> int:
    if args.m < 0 or args.m > M_MAX:
        raise UsageError(f"invalid level m={args.m}")
    try:
        rep = SymbolRep(args.rep)
    except ValueError:
        raise UsageError(f"unknown representation {args.rep!r}") from None
    try:
        grid = load_grid(args.input)
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"malformed grid input: {exc}", file=sys.stderr)
        return 2

    if args.method == "spectral":
        out = berezin_spectral(grid, args.m, rep=rep)
        out.metadata["method"] = "spectral"
    else:
        # the pointwise method only reaches nodes a margin away from the
        # boundary; the output grid is that interior sub-rectangle
        xs, ys = grid.x, grid.y
        ki = np.where((xs - grid.xmin >= DIRECT_MARGIN) & (grid.xmax - xs >= DIRECT_MARGIN))[0]
        kj = np.where((ys - grid.ymin >= DIRECT_MARGIN) & (grid.ymax - ys >= DIRECT_MARGIN))[0]
        if len(ki) < 8 or len(kj) < 8:
            print(
                f"direct method needs an interior sub-grid of at least 8x8 nodes a margin "
                f"of {DIRECT_MARGIN} away from the boundary; this grid leaves "
                f"{len(ki)}x{len(kj)}",
                file=sys.stderr,
            )
            return 1
        pts = [complex(xs[i], ys[j]) for i in ki for j in kj]
        try:
            vals = berezin_direct(grid, args.m, pts)
        except BoundaryMarginError as exc:
            print(str(exc), file=sys.stderr)
            return 1
        out = GridFunction2D(
            len(ki),
            len(kj),
            xs[ki[0]],
            xs[ki[-1]],
            ys[kj[0]],
            ys[kj[-1]],
            np.array(vals, dtype=complex).reshape(len(ki), len(kj)),
            metadata={"method": "direct", "rep": rep.value, "m": args.m, "warnings": []},
        )
    save_grid(out, args.output)
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="berezin",
        description="Landau-level transforms: exact coefficient tables, "
        "verification suites, kernel and multiplier evaluation, grid transforms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", help="exact coefficient families and the convention report")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(fn=cmd_coeffs)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("--suite", choices=SUITE_NAMES, required=True)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--tol", type=float, default=None)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("transform", help="apply the transform to a gridded field")
    p.add_argument("--input", required=True, help="grid manifest (JSON + CSV)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--method", choices=("spectral", "direct"), default="spectral")
    p.add_argument(
        "--rep",
        default="ORACLE",
        choices=[r.value for r in SymbolRep],
        help="multiplier representation (SIGMA_FORM is the uncorrected printed table)",
    )
    p.add_argument("--output", required=True, help="output manifest path")
    p.set_defaults(fn=cmd_transform)

    p = sub.add_parser("kernel", help="evaluate the reproducing kernel at a point pair")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--z", type=float, nargs="+", required=True, help="2n reals: x1 y1 ...")
    p.add_argument("--w", type=float, nargs="+", required=True)
    p.set_defaults(fn=cmd_kernel)

    p = sub.add_parser("symbol", help="evaluate the Fourier multiplier at |xi|")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--xi-norm", type=float, required=True)
    p.set_defaults(fn=cmd_symbol)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(fn=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BoundaryMarginError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
