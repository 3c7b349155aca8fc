"""Command-line front end.

Subcommands
  field       build GF(p^d), print the chosen modulus and a sanity table
  cyclotomy   cyclotomic numbers, generalized numbers, Gaussian periods
  code        exhaustive distributions of one code (dist, hdist, tdist,
              dim, puncture-dist)
  verify      run every applicable closed-form check for a parameter set

JSON goes to standard output (one envelope per invocation, see
output_schema.json); diagnostics go to standard error.  Exit codes:
0 success / all checks passed, 1 verification failure, 2 invalid
parameters, 3 work budget exceeded.

The environment variable PAIRWEIGHT_TABLE_CAP overrides the field table cap.
Note: the code/verify subcommands use ``-h`` for the code parameter h; ask
for help with ``--help``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .errors import BudgetError, NotApplicableError, ParameterError
from .field import DEFAULT_TABLE_CAP, build_field
from . import cyclotomy as cyc
from . import paircode as pc
from .verify import verify_all

SCHEMA_VERSION = "1.0.0"

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_BAD_PARAMS = 2
EXIT_BUDGET = 3


def _table_cap() -> int:
    raw = os.environ.get("PAIRWEIGHT_TABLE_CAP")
    return int(raw) if raw else DEFAULT_TABLE_CAP


def validate_envelope(obj: dict) -> list[str]:
    """Check an output object against the published envelope schema.

    Returns a list of problems (empty when valid).
    """
    problems = []
    required = {
        "schema_version": str,
        "command": str,
        "params": dict,
        "status": str,
        "elapsed_ms": int,
    }
    if not isinstance(obj, dict):
        return ["envelope is not an object"]
    for key, typ in required.items():
        if key not in obj:
            problems.append(f"missing key: {key}")
        elif not isinstance(obj[key], typ):
            problems.append(f"key {key} has type {type(obj[key]).__name__}")
    if "result" not in obj:
        problems.append("missing key: result")
    elif obj["result"] is not None and not isinstance(obj["result"], dict):
        problems.append("result must be an object or null")
    if obj.get("status") not in ("ok", "error"):
        problems.append(f"bad status: {obj.get('status')!r}")
    if isinstance(obj.get("elapsed_ms"), int) and obj["elapsed_ms"] < 0:
        problems.append("elapsed_ms is negative")
    extra = set(obj) - set(required) - {"result"}
    if extra:
        problems.append(f"unexpected keys: {sorted(extra)}")
    return problems


def _emit(payload: str, out_path: str | None) -> None:
    print(payload)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(payload + "\n")


def _emit_envelope(command, params, result, status, started, out_path) -> None:
    envelope = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "params": params,
        "result": result,
        "status": status,
        "elapsed_ms": int((time.perf_counter() - started) * 1000),
    }
    _emit(json.dumps(envelope, sort_keys=True), out_path)


def _complex_result(z: complex) -> dict:
    re = 0.0 if abs(z.real) < 1e-9 else z.real
    im = 0.0 if abs(z.imag) < 1e-9 else z.imag
    return {"re": z.real, "im": z.imag, "display": f"{re:.6g}{im:+.6g}i"}


def _dist_result(dist: pc.WeightDistribution, extra: dict | None = None) -> dict:
    out = {
        "pairs": dist.as_pairs(),
        "enumerator": dist.enumerator(),
        "total": dist.total,
    }
    if extra:
        out.update(extra)
    return out


def _dist_csv(dist: pc.WeightDistribution) -> str:
    lines = ["weight,count"]
    lines += [f"{w},{c}" for w, c in dist.as_pairs()]
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_field(args, out_path) -> int:
    started = time.perf_counter()
    ctx = build_field(args.p, args.d, table_cap=_table_cap())
    sample = []
    for k in range(min(ctx.r - 1, 8)):
        sample.append({"exponent": k, "coeffs": list(ctx.coeffs(ctx.element(k)))})
    result = {
        "p": ctx.p,
        "d": ctx.d,
        "r": ctx.r,
        "modulus": list(ctx.modulus),
        "alpha_order": ctx.r - 1,
        "sample_powers": sample,
    }
    _emit_envelope(
        "field", {"p": args.p, "d": args.d}, result, "ok", started, out_path
    )
    return EXIT_OK


def _cmd_cyclotomy(args, out_path) -> int:
    started = time.perf_counter()
    params = {"p": args.p, "d": args.d, "query": args.query}
    ctx = build_field(args.p, args.d, table_cap=_table_cap())
    if args.query == "number":
        params.update({"N": args.N, "i": args.i, "j": args.j})
        result = {"value": cyc.cyclotomic_number(ctx, args.N, args.i, args.j)}
    elif args.query == "gnumber":
        params.update({"l": args.l, "f": args.f, "i": args.i, "j": args.j})
        result = {
            "value": cyc.generalized_cyclotomic_number(
                ctx, args.l, args.f, args.i, args.j
            )
        }
    elif args.query == "period":
        params.update({"N": args.N, "i": args.i})
        result = _complex_result(cyc.gaussian_period_numeric(ctx, args.N, args.i))
    else:  # period-closed
        eta0, eta1 = cyc.gaussian_period_closed_form_n2(args.p, 1, args.d)
        result = {"eta0": _complex_result(eta0), "eta1": _complex_result(eta1)}
    _emit_envelope("cyclotomy." + args.query, params, result, "ok", started, out_path)
    return EXIT_OK


def _code_params(args) -> pc.CodeParams:
    return pc.make_params(
        args.p, args.s, args.m, args.h, args.e, table_cap=_table_cap()
    )


def _cmd_code(args, out_path) -> int:
    started = time.perf_counter()
    params = _code_params(args)
    echo = {
        "p": args.p, "s": args.s, "m": args.m, "h": args.h, "e": args.e,
        "q": params.q, "r": params.r, "n": params.n,
        "regime": params.regime.value,
    }
    workers = args.workers
    action = args.action
    if action == "dist":
        dist = pc.pair_weight_distribution(params, workers=workers, budget=args.budget)
        result = _dist_result(dist)
    elif action == "hdist":
        dist = pc.hamming_weight_distribution(params, workers=workers, budget=args.budget)
        result = _dist_result(dist)
    elif action == "tdist":
        tc = pc.t_value_distribution(params, workers=workers, budget=args.budget)
        result = {
            "pairs": [[t, tc[t]] for t in sorted(tc)],
            "total": sum(tc.values()),
        }
        dist = None
    elif action == "dim":
        result = {
            "dimension": pc.dimension(params, workers=workers, budget=args.budget),
            "length": params.n,
            "q": params.q,
        }
        dist = None
    else:  # puncture-dist
        punctured = pc.puncture_half(params)
        summary = punctured.enumerate(workers=workers, budget=args.budget)
        dist = summary.punctured_pair
        pdim = pc.dimension_from_distribution(params, dist)
        dp = dist.min_nonzero_weight()
        result = _dist_result(
            dist,
            extra={
                "length": punctured.n,
                "dimension": pdim,
                "min_pair_distance": dp,
                "mds": pc.is_mds_symbol_pair(punctured.n, pdim, dp, params.q),
            },
        )

    if args.format == "csv" and dist is not None:
        _emit(_dist_csv(dist), out_path)
    elif args.format == "text" and dist is not None:
        _emit(result["enumerator"], out_path)
    else:
        _emit_envelope("code." + action, echo, result, "ok", started, out_path)
    return EXIT_OK


def _cmd_verify(args, out_path) -> int:
    started = time.perf_counter()
    params = _code_params(args)
    report = verify_all(
        params,
        workers=args.workers,
        budget=args.budget,
        seed=args.seed,
        corrupt_weight=args.corrupt,
    )
    if args.format == "json":
        _emit_envelope(
            "verify",
            report.params,
            report.to_dict(),
            "ok",
            started,
            out_path,
        )
    elif args.format == "csv":
        _emit(report.to_csv().rstrip("\n"), out_path)
    else:
        _emit(report.to_text(), out_path)
    return EXIT_OK if report.passed_all else EXIT_VERIFY_FAILED


# ---------------------------------------------------------------------------
# parser


def _add_code_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--help", action="help", help="show this help message")
    parser.add_argument("-p", type=int, required=True, help="characteristic (prime)")
    parser.add_argument("-s", type=int, required=True, help="degree of GF(q) over GF(p)")
    parser.add_argument("-m", type=int, required=True, help="degree of GF(r) over GF(q)")
    parser.add_argument("-h", dest="h", type=int, required=True,
                        help="divisor h of q-1 (length factor)")
    parser.add_argument("-e", type=int, required=True, help="divisor e of h, e > 1")
    parser.add_argument("--workers", type=int, default=None,
                        help="parallel enumeration workers (default: all cores)")
    parser.add_argument("--budget", type=int, default=pc.DEFAULT_BUDGET,
                        help="max r^2*n symbol operations before refusing")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pairweight",
        description="symbol-pair weight distributions of two-nonzero "
        "reducible cyclic codes, with closed-form verification",
    )
    parser.add_argument("-o", dest="out", default=None,
                        help="also write the output payload to this file")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p_field = sub.add_parser("field", help="build GF(p^d) and print its tables' summary")
    p_field.add_argument("-p", type=int, required=True)
    p_field.add_argument("-d", type=int, required=True)

    p_cyc = sub.add_parser("cyclotomy", help="cyclotomic numbers and Gaussian periods")
    p_cyc.add_argument("-p", type=int, required=True)
    p_cyc.add_argument("-d", type=int, required=True)
    cyc_sub = p_cyc.add_subparsers(dest="query", required=True)
    q_num = cyc_sub.add_parser("number", help="cyclotomic number (i,j) of order N")
    q_num.add_argument("N", type=int)
    q_num.add_argument("i", type=int)
    q_num.add_argument("j", type=int)
    q_gnum = cyc_sub.add_parser("gnumber", help="generalized cyclotomic number of order (l,f)")
    q_gnum.add_argument("l", type=int)
    q_gnum.add_argument("f", type=int)
    q_gnum.add_argument("i", type=int)
    q_gnum.add_argument("j", type=int)
    q_per = cyc_sub.add_parser("period", help="Gaussian period eta_i of order N (numeric)")
    q_per.add_argument("N", type=int)
    q_per.add_argument("i", type=int)
    cyc_sub.add_parser("period-closed", help="closed-form order-2 Gaussian periods")

    p_code = sub.add_parser("code", add_help=False,
                            help="exhaustive code distributions (--help for flags)")
    _add_code_arguments(p_code)
    p_code.add_argument("action", choices=["dist", "hdist", "tdist", "dim", "puncture-dist"])
    p_code.add_argument("--format", choices=["json", "csv", "text"], default="json")

    p_ver = sub.add_parser("verify", add_help=False,
                           help="closed-form checks vs enumeration (--help for flags)")
    _add_code_arguments(p_ver)
    p_ver.add_argument("--format", choices=["json", "csv", "text"], default="json")
    p_ver.add_argument("--seed", type=int, default=0,
                       help="seed for the sampled spot checks")
    p_ver.add_argument("--corrupt", type=int, default=None, metavar="WEIGHT",
                       help="negative control: decrement the enumerated count "
                       "at this weight before comparing")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    handler = {
        "field": _cmd_field,
        "cyclotomy": _cmd_cyclotomy,
        "code": _cmd_code,
        "verify": _cmd_verify,
    }[args.cmd]
    try:
        return handler(args, args.out)
    except (ParameterError, NotApplicableError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        _emit_envelope(
            args.cmd, {}, {"error": str(exc)}, "error", started, args.out
        )
        return EXIT_BAD_PARAMS
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        _emit_envelope(
            args.cmd,
            {},
            {"error": str(exc), "required": exc.required, "budget": exc.budget},
            "error",
            started,
            args.out,
        )
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
