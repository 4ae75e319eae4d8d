"""Command-line front end.

Exit codes: 0 success, 2 usage or invalid parameters, 3 internal
verification failure during construction, 4 a ``verify`` check failed.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Sequence

from .constructions import (
    EuclideanSeed,
    Thm31Params,
    Thm32Params,
    full_field_seed,
    mu_n_seed,
    thm31_construct,
    thm32_construct,
    thm41_lift,
    thm42_lift,
)
from .eaqecc import derive_eaqecc, param_table, rows_to_csv, rows_to_json
from .errors import (
    GaloisHullError,
    InvalidCodeError,
    NormEquationFailedError,
    TooLargeForExactError,
    VerificationError,
)
from .field import FieldElement, field_from_json, field_new
from .grs import EXACT_LENGTH_GUARD, GrsCode, check_mds, min_distance_exact
from .hull import hull_dim

EXIT_OK, EXIT_USAGE, EXIT_INTERNAL, EXIT_VERIFY = 0, 2, 3, 4
CONSTRUCT_PARAMS = ("p", "e", "m", "h", "t", "r", "k", "l", "seed")


class UsageError(Exception):
    pass


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def parse_range(text: str | None) -> list[int] | None:
    """``"3"``, ``"1..4"`` (inclusive), ``"0,2,5"`` or ``"all"`` (``None``)."""
    if text is None or text == "all":
        return None
    out: list[int] = []
    try:
        for part in text.split(","):
            if ".." in part:
                lo, hi = part.split("..")
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(part))
    except ValueError as exc:
        raise UsageError(f"bad range {text!r}") from exc
    return out


def _load_json(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _need(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"theorem {args.theorem} needs {', '.join(missing)}")


def _seed_from_args(args: argparse.Namespace) -> EuclideanSeed:
    extended = args.theorem == "4.2"
    choice = args.seed
    if choice is None:
        raise UsageError("theorem 4.x needs --seed (full-field, mu-N, or a code JSON file)")
    if choice == "full-field" or choice.startswith("mu-"):
        _need(args, "p", "h")
        F = field_new(args.p, args.h)
        if choice == "full-field":
            seed = full_field_seed(F)
        else:
            seed = mu_n_seed(F, int(choice[3:]))
    else:
        seed = EuclideanSeed.from_code(GrsCode.from_json(_load_json(choice)))
    if seed.extended != extended:
        kind = "extended" if extended else "plain"
        raise UsageError(f"theorem {args.theorem} needs a {kind} seed")
    return seed


def _describe(code: GrsCode) -> dict:
    return {"length": code.length, "k": code.k, "n_points": code.n, "extended": code.extended,
            "field": code.ctx.to_json()}


def _apply_request(args: argparse.Namespace) -> None:
    """Fill construct flags from ``{"theorem", "params", "verify"}`` JSON."""
    data = _load_json(args.request)
    if not isinstance(data, dict):
        raise UsageError("request must be a JSON object")
    if "theorem" in data:
        args.theorem = str(data["theorem"])
    for name, value in dict(data.get("params", {})).items():
        if name not in CONSTRUCT_PARAMS:
            raise UsageError(f"unknown request parameter {name!r}")
        setattr(args, name, value if name == "seed" else int(value))
    if data.get("verify") is False:
        args.no_verify = True


def cmd_construct(args: argparse.Namespace) -> tuple[int, dict]:
    if args.request:
        _apply_request(args)
    if args.theorem not in ("3.1", "3.2", "4.1", "4.2"):
        raise UsageError("construct needs --theorem 3.1, 3.2, 4.1 or 4.2")
    verify = not args.no_verify
    th = args.theorem
    if th == "3.1":
        _need(args, "p", "e", "m", "t", "r", "k", "l")
        params = Thm31Params(args.p, args.e, args.m, args.t, args.r, args.k, args.l)
        code = thm31_construct(params, verify=verify)
    elif th == "3.2":
        _need(args, "p", "h", "e", "t", "k", "l")
        params = Thm32Params(args.p, args.h, args.e, args.t, args.k, args.l)
        code = thm32_construct(params, verify=verify)
    else:
        _need(args, "e", "k", "l")
        seed = _seed_from_args(args)
        lift = thm41_lift if th == "4.1" else thm42_lift
        code = lift(seed, args.e, args.k, args.l, verify=verify)
    report: dict = {"code": _describe(code)}
    if verify:
        mds = check_mds(code)
        report["verification"] = {
            "hull": hull_dim(code, args.e).to_json(),
            "mds": {"mds": mds.mds, "method": mds.method},
        }
    else:
        report["verification"] = "skipped: correctness rests on the construction theorem"
    if args.out:
        Path(args.out).write_text(dumps(code.to_json()) + "\n")
        report["output"] = args.out
    else:
        report["output"] = code.to_json()
    return EXIT_OK, report


def _checked_code(data: dict) -> tuple[GrsCode | None, list[str]]:
    """Parse a code file, naming every structural defect instead of raising."""
    try:
        F = field_from_json(data["field"])
        a = [F.from_coeffs(c) for c in data["a"]]
        v = [F.from_coeffs(c) for c in data["v"]]
        k, extended = int(data["k"]), bool(data.get("extended", False))
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed code file: {exc}") from exc
    failures = []
    if len(set(a)) != len(a):
        failures.append("evaluation points not distinct")
    if any(x == 0 for x in v):
        failures.append("multiplier zero")
    if len(a) != len(v):
        failures.append("point and multiplier counts differ")
    if not 1 <= k <= len(a):
        failures.append(f"dimension k={k} out of range")
    if failures:
        return None, failures
    try:
        return GrsCode(F, a, v, k, extended), []
    except InvalidCodeError as exc:
        return None, [str(exc)]


def cmd_verify(args: argparse.Namespace) -> tuple[int, dict]:
    code, failures = _checked_code(_load_json(args.code))
    report: dict = {"checks": {}}
    if code is None:
        report["failed"] = failures
        return EXIT_VERIFY, report
    checks = report["checks"]
    G = code.generator_matrix()
    checks["generator_rank"] = G.rank() == code.k
    hull = hull_dim(code, args.e)
    report["hull"] = hull.to_json()
    checks["hull_methods_agree"] = hull.method_agreement
    checks["dual_dim"] = hull.dual_dim == code.length - code.k
    if args.exact_distance:
        if code.length > EXACT_LENGTH_GUARD:
            raise UsageError(f"--exact-distance needs length <= {EXACT_LENGTH_GUARD}")
        d = min_distance_exact(code)
        report["mds"] = {"distance": d, "method": "exhaustive"}
        checks["mds"] = d == code.length - code.k + 1
    else:
        mds = check_mds(code, guard=0)
        report["mds"] = {"distance": mds.distance, "method": mds.method}
        checks["mds"] = mds.mds
    if args.expect_hull is not None:
        checks["expected_hull"] = hull.hull_dim == args.expect_hull
    if args.show:
        F = code.ctx
        report["points"] = [str(FieldElement(F, x)) for x in code.a]
        report["multipliers"] = [str(FieldElement(F, x)) for x in code.v]
    report["code"] = _describe(code)
    failed = [name for name, ok in checks.items() if not ok]
    if failed:
        report["failed"] = failed
        return EXIT_VERIFY, report
    return EXIT_OK, report


def cmd_hull(args: argparse.Namespace) -> tuple[int, dict]:
    code = GrsCode.from_json(_load_json(args.code))
    es = range(code.ctx.h) if args.e is None else [args.e]
    return EXIT_OK, {"hulls": [hull_dim(code, e).to_json() for e in es]}


def cmd_eaqecc(args: argparse.Namespace) -> tuple[int, dict]:
    code = GrsCode.from_json(_load_json(args.code))
    primal, dual_side = derive_eaqecc(code, args.e)
    return EXIT_OK, {
        "primal": {**primal.to_json(), "text": str(primal)},
        "dual_side": {**dual_side.to_json(), "text": str(dual_side)},
    }


def cmd_table(args: argparse.Namespace) -> tuple[int, None]:
    params = {name: getattr(args, name) for name in ("p", "m", "h", "e", "t", "r", "n")}
    ks = parse_range(args.k)
    if ks is None:
        raise UsageError("table needs an explicit --k range")
    parts = ("i", "ii") if args.part == "both" else (args.part,)
    rows = list(param_table(args.theorem, params, ks, parse_range(args.l), parts))
    text = rows_to_csv(rows) if args.format == "csv" else rows_to_json(rows) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK, None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="galoishull",
        description="MDS GRS codes with prescribed Galois hulls and their EAQECC parameters.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a code from one of the four constructions")
    c.add_argument("--theorem", choices=["3.1", "3.2", "4.1", "4.2"])
    for name in CONSTRUCT_PARAMS[:-1]:
        c.add_argument(f"--{name}", type=int)
    c.add_argument("--request", help='JSON {"theorem": ..., "params": {...}, "verify": bool}')
    c.add_argument("--seed", help="full-field, mu-N, or a code JSON file (theorems 4.x)")
    c.add_argument("--no-verify", action="store_true", help="skip the internal hull/MDS verification")
    c.add_argument("--out", help="write the code JSON here")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="recheck a serialized code")
    v.add_argument("code")
    v.add_argument("--e", type=int, required=True)
    v.add_argument("--exact-distance", action="store_true")
    v.add_argument("--expect-hull", type=int)
    v.add_argument("--show", action="store_true", help="list points and multipliers")
    v.set_defaults(func=cmd_verify)

    hl = sub.add_parser("hull", help="hull dimensions of a serialized code")
    hl.add_argument("code")
    hl.add_argument("--e", type=int, help="default: every e in 0..h-1")
    hl.set_defaults(func=cmd_hull)

    q = sub.add_parser("eaqecc", help="EAQECC parameters of a serialized code")
    q.add_argument("code")
    q.add_argument("--e", type=int, required=True)
    q.set_defaults(func=cmd_eaqecc)

    t = sub.add_parser("table", help="symbolic EAQECC parameter table")
    t.add_argument("--theorem", required=True, choices=["5.5", "5.6", "5.7", "5.8"])
    for name in ("p", "m", "h", "e", "t", "r", "n"):
        t.add_argument(f"--{name}", type=int)
    t.add_argument("--k", required=True, help="e.g. 1..3")
    t.add_argument("--l", help="e.g. 0, 0..2, or all (default)")
    t.add_argument("--part", choices=["i", "ii", "both"], default="both")
    t.add_argument("--format", choices=["csv", "json"], default="csv")
    t.add_argument("--out")
    t.set_defaults(func=cmd_table)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        status, report = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (VerificationError, NormEquationFailedError) as exc:
        print(f"internal verification failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (TooLargeForExactError, GaloisHullError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if report is not None:
        inputs = {k: v for k, v in vars(args).items() if k not in ("func", "command") and v not in (None, False)}
        report = {
            "command": args.command,
            "argv": list(argv) if argv is not None else sys.argv[1:],
            "inputs": inputs,
            **report,
            "elapsed_s": round(time.perf_counter() - start, 3),
            "exit_status": status,
        }
        print(dumps(report))
        if status == EXIT_VERIFY:
            print(f"verification failed: {', '.join(report['failed'])}", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
