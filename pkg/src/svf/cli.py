"""Command line interface: ``svf eval``, ``svf verify``, ``svf bench``.

Exit codes: 0 success, 1 usage or input error, 2 pole/degeneracy during
eval, 3 a verification suite reported failures.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from decimal import Decimal, localcontext
from fractions import Fraction
from pathlib import Path
from typing import Callable

from . import closed_forms as cf
from .contraction import ModelParams, gdw_contract, trapezoid_value, triangular_contract
from .efp import EfpParams, efp_components, efp_determinant, gamma
from .errors import DegeneracyError, PoleError, SVFError
from .scalar import bits, format_rational, parse_rational
from .suites import SUITES, Redraw, Sampler, draw_regime_params, run_suite
from .vertex import BoundaryVectors

EXIT_OK, EXIT_INPUT, EXIT_POLE, EXIT_FAILED = 0, 1, 2, 3

METHODS = {
    "triangular": ("contraction", "factorized"),
    "gdw": ("contraction", "subset-sum", "determinant"),
    "trapezoid": ("contraction", "factorized"),
    "efp": ("determinant", "components"),
    "z11": ("factorized", "contraction"),
    "beta": ("factorized",),
    "gamma": ("factorized",),
}

# largest size accepted by `bench` for each quantity
BENCH_LIMITS = {"triangular": 12, "gdw": 12, "trapezoid": 12, "efp": 8}
MAX_VERIFY_N = 12


class InputError(SVFError):
    pass


# --- parameter files -------------------------------------------------------


def _rat(value, where: str) -> Fraction:
    if not isinstance(value, str):
        raise InputError(f"{where}: expected a rational string, got {value!r}")
    try:
        return parse_rational(value)
    except SVFError as exc:
        raise InputError(f"{where}: {exc}") from exc


def load_params(path: str) -> dict:
    """Read and validate a ParamFile; returns parsed Fractions and vectors."""
    try:
        raw = json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise InputError("parameter file must hold a JSON object")
    out: dict = {}
    if "c" in raw:
        out["c"] = _rat(raw["c"], "c")
        if out["c"] == 0:
            raise InputError("c must be nonzero")
    for key in ("u", "v"):
        items = raw.get(key, [])
        if not isinstance(items, list):
            raise InputError(f"{key} must be a list of rational strings")
        out[key] = [_rat(x, f"{key}[{i}]") for i, x in enumerate(items)]
    vecs = raw.get("vectors")
    if not isinstance(vecs, dict) or set(vecs) != {"n", "e", "s", "w"}:
        raise InputError('vectors must map exactly the keys "n", "e", "s", "w"')
    pairs = {}
    for role in ("n", "e", "s", "w"):
        pair = vecs[role]
        if not isinstance(pair, list) or len(pair) != 2:
            raise InputError(f"vectors.{role} must be a 2-list of rational strings")
        pairs[role] = (_rat(pair[0], f"vectors.{role}[0]"), _rat(pair[1], f"vectors.{role}[1]"))
    out["vectors"] = BoundaryVectors(**pairs)
    if "split" in raw:
        split = raw["split"]
        if not (isinstance(split, list) and len(split) == 2 and all(isinstance(x, int) and x >= 0 for x in split)):
            raise InputError("split must be [n, m] with nonnegative integers")
        out["split"] = tuple(split)
    return out


def _need(params: dict, *keys: str) -> None:
    for key in keys:
        if key not in params:
            raise InputError(f"this quantity needs '{key}' in the parameter file")


def _trapezoid_args(params: dict):
    _need(params, "c", "split")
    n, m = params["split"]
    if n + m != len(params["v"]):
        raise InputError(f"split {list(params['split'])} needs {n + m} entries in v, got {len(params['v'])}")
    return params["v"], (n, m), params["c"], params["vectors"]


def evaluate(quantity: str, method: str, params: dict) -> Fraction:
    vecs = params["vectors"]
    if quantity == "triangular":
        _need(params, "c")
        f = triangular_contract if method == "contraction" else cf.triangular_factorized
        return f(params["u"], params["c"], vecs.e, vecs.s)
    if quantity in ("gdw", "z11"):
        _need(params, "c")
        p = ModelParams(params["c"], params["u"], params["v"], vecs)
        if quantity == "z11":
            if p.m != 1 or p.n != 1:
                raise InputError("z11 needs exactly one u and one v")
            if method == "contraction":
                return gdw_contract(p)
            return cf.z11_explicit(p.u[0], p.v[0], p.c, vecs)
        return {"contraction": gdw_contract, "subset-sum": cf.gdw_subset_sum, "determinant": cf.gdw_determinant}[method](p)
    if quantity == "trapezoid":
        args = _trapezoid_args(params)
        return trapezoid_value(*args) if method == "contraction" else cf.trapezoid_factorized(*args)
    if quantity == "efp":
        v, (n, m), c, _ = _trapezoid_args(params)
        p = EfpParams(n, m, tuple(v), c, vecs)
        return efp_determinant(p) if method == "determinant" else efp_components(p)
    if quantity == "beta":
        return cf.beta(vecs)
    if quantity == "gamma":
        return gamma(vecs)
    raise InputError(f"unknown quantity {quantity!r}")


def _echo(params: dict) -> dict:
    out = {}
    if "c" in params:
        out["c"] = format_rational(params["c"])
    out["u"] = [format_rational(x) for x in params["u"]]
    out["v"] = [format_rational(x) for x in params["v"]]
    out["vectors"] = {r: [format_rational(x) for x in pair] for r, pair in params["vectors"].as_dict().items()}
    if "split" in params:
        out["split"] = list(params["split"])
    return out


def decimal_string(x: Fraction, digits: int) -> str:
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(x.numerator) / Decimal(x.denominator))


def _emit(obj: dict) -> None:
    print(json.dumps(obj, indent=2))


def cmd_eval(args) -> int:
    quantity = args.quantity
    method = args.method or METHODS[quantity][0]
    if method not in METHODS[quantity]:
        _emit({"error": "input", "message": f"method {method!r} not available for {quantity}; choose from {list(METHODS[quantity])}"})
        return EXIT_INPUT
    try:
        params = load_params(args.params)
        value = evaluate(quantity, method, params)
    except PoleError as exc:
        kind = "degeneracy" if isinstance(exc, DegeneracyError) else "pole"
        _emit({"error": kind, "factor": exc.factor, "message": str(exc)})
        return EXIT_POLE
    except (SVFError, ValueError) as exc:
        _emit({"error": "input", "message": str(exc)})
        return EXIT_INPUT
    result = {"quantity": quantity, "method": method, "value": format_rational(value)}
    if args.float:
        result["float"] = decimal_string(value, args.digits)
    result["params"] = _echo(params)
    _emit(result)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.suite != "all" and args.suite not in SUITES:
        _emit({"error": "input", "message": f"unknown suite {args.suite!r}; choose from {['all', *SUITES]}"})
        return EXIT_INPUT
    if not 1 <= args.max_n <= MAX_VERIFY_N or args.trials < 0:
        _emit({"error": "input", "message": f"--max-n must lie in 1..{MAX_VERIFY_N} and --trials >= 0"})
        return EXIT_INPUT
    report = run_suite(args.suite, args.trials, args.seed, args.max_n)
    _emit(report.to_dict())
    return EXIT_OK if report.ok else EXIT_FAILED


# --- bench -----------------------------------------------------------------


def _bench_case(quantity: str, method: str, size: int) -> Callable[[dict], Fraction]:
    """Deterministic pole-free inputs for one benchmark size."""
    smp = Sampler(f"bench:{quantity}:{size}")
    for _ in range(1000):
        c, vecs = smp.nonzero(), smp.vectors()
        try:
            if quantity == "triangular":
                u = smp.rationals(size)
                if method == "contraction":
                    return lambda st: triangular_contract(u, c, vecs.e, vecs.s, stats=st)
                return lambda st: cf.triangular_factorized(u, c, vecs.e, vecs.s)
            if quantity == "gdw":
                p = ModelParams(c, smp.distinct(min(size, 8)), smp.rationals(size), vecs)
                if method == "contraction":
                    return lambda st: gdw_contract(p, stats=st)
                f = cf.gdw_subset_sum if method == "subset-sum" else cf.gdw_determinant
                f(p)
                return lambda st: f(p)
            if quantity == "trapezoid":
                m = size // 2
                args = (smp.rationals(size), (size - m, m), c, vecs)
                if method == "contraction":
                    trapezoid_value(*args)
                    return lambda st: trapezoid_value(*args, stats=st)
                return lambda st: cf.trapezoid_factorized(*args)
            if quantity == "efp":
                p = draw_regime_params(smp, size, min(size, 4))
                f = efp_determinant if method == "determinant" else efp_components
                f(p)
                return lambda st: f(p)
        except (PoleError, Redraw):
            continue
    raise InputError(f"no pole-free inputs found for {quantity} size {size}")


def _parse_sizes(text: str) -> range:
    try:
        lo, hi = (int(x) for x in text.split(".."))
    except ValueError as exc:
        raise InputError(f"--sizes must look like A..B, got {text!r}") from exc
    if lo < 1 or hi < lo:
        raise InputError(f"bad size range {text!r}")
    return range(lo, hi + 1)


def cmd_bench(args) -> int:
    quantity = args.quantity
    method = args.method or METHODS[quantity][0]
    try:
        if method not in METHODS[quantity] or quantity in ("z11", "beta", "gamma"):
            raise InputError(f"cannot bench {quantity} with method {method!r}")
        sizes = _parse_sizes(args.sizes)
        if sizes[-1] > BENCH_LIMITS[quantity]:
            raise InputError(f"{quantity} sizes are limited to {BENCH_LIMITS[quantity]}")
        rows = []
        for size in sizes:
            run = _bench_case(quantity, method, size)
            stats: dict = {}
            start = time.perf_counter()
            value = run(stats)
            seconds = time.perf_counter() - start
            rows.append((size, method, f"{seconds:.6f}", stats.get("max_bits", bits(value))))
    except SVFError as exc:
        print(f"svf bench: {exc}", file=sys.stderr)
        return EXIT_INPUT
    out = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["size", "method", "seconds", "max_bits"])
        writer.writerows(rows)
    finally:
        if args.out:
            out.close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="svf", description="Exact rational six-vertex partition functions.")
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", help="evaluate one quantity from a parameter file")
    ev.add_argument("quantity", choices=sorted(METHODS))
    ev.add_argument("--method", help="evaluation route (default: first listed for the quantity)")
    ev.add_argument("--params", required=True, help="JSON parameter file")
    ev.add_argument("--float", action="store_true", help="also print a decimal approximation")
    ev.add_argument("--digits", type=int, default=20, help="significant digits for --float")
    ev.set_defaults(func=cmd_eval)

    ve = sub.add_parser("verify", help="run randomized exact identity suites")
    ve.add_argument("--suite", required=True, help="suite name or 'all'")
    ve.add_argument("--trials", type=int, default=25)
    ve.add_argument("--seed", type=int, default=0)
    ve.add_argument("--max-n", type=int, default=5)
    ve.set_defaults(func=cmd_verify)

    be = sub.add_parser("bench", help="time contraction against closed forms")
    be.add_argument("--quantity", required=True, choices=sorted(BENCH_LIMITS))
    be.add_argument("--sizes", required=True, help="inclusive range A..B")
    be.add_argument("--method")
    be.add_argument("--out", help="CSV output file (default: stdout)")
    be.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
