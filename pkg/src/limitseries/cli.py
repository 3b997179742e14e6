"""Command-line front end: ``lls <command> ...``.

Exit codes: 0 success, 1 a sweep found a counterexample or ``classify
--expect-open`` got a negative verdict, 2 invalid input or usage.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from .classifier import DEFAULT_POLICY, NonemptyPolicy, classify
from .construction import build_optimal_triple, build_trace
from .enumeration import default_budget, enumerate_pairs, enumerate_triples, max_dimension, sweep
from .errors import BudgetExceeded, LimitSeriesError, NotAdmissible
from .sequences import (
    VanishingPair,
    b_sequences,
    connected_at,
    is_connected,
    is_refined,
    ramification_sum,
)
from .triples import (
    AdmissibleTriple,
    check_admissible,
    dimension,
    dimension_unchecked,
    dimension_via_sync,
    sync_map,
)


class InputError(LimitSeriesError):
    pass


def _load_json(value: str, flag: str):
    text = value.strip()
    if not text.startswith(("{", "[")):
        path = Path(value)
        if not path.is_file():
            raise InputError(f"{flag}: not inline JSON and no such file: {value}")
        text = path.read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{flag}: invalid JSON ({exc.msg})") from None


def _pair(args) -> VanishingPair:
    if args.pair is None:
        raise InputError("--pair is required")
    data = _load_json(args.pair, "--pair")
    if not isinstance(data, dict):
        raise InputError("--pair must be a JSON object")
    return VanishingPair.from_dict(data)


def _triple(args) -> AdmissibleTriple:
    data = _load_json(args.triple, "--triple")
    try:
        return AdmissibleTriple.from_dict(data)
    except (KeyError, TypeError, ValueError):
        raise InputError('--triple must look like {"betaY": [...], "betaZ": [...], "eps": [...]}') from None


# rendering -----------------------------------------------------------------

def _scalar(v):
    if isinstance(v, (list, dict)):
        return json.dumps(v)
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def _emit(out, fmt: str, payload: dict, rows: list[dict] | None = None, fields=None):
    if fmt == "json":
        out.write(json.dumps(payload, indent=2) + "\n")
    elif fmt == "csv":
        rows = rows if rows is not None else [payload]
        fields = fields or list(rows[0].keys())
        w = csv.DictWriter(out, fieldnames=fields, lineterminator="\n", extrasaction="ignore")
        w.writeheader()
        for row in rows:
            w.writerow({k: _scalar(row[k]) if k in row else "" for k in fields})
    else:
        for key, value in payload.items():
            out.write(f"{key}: {_scalar(value)}\n")


# commands ------------------------------------------------------------------

def cmd_validate(args, out):
    pair = _pair(args)
    bY, bZ = b_sequences(pair)
    _emit(out, args.format, {
        "valid": True,
        "pair": pair.to_dict(),
        "refined": is_refined(pair),
        "sigma": ramification_sum(pair),
        "bY": list(bY),
        "bZ": list(bZ),
    })
    return 0


def cmd_connect(args, out):
    pair = _pair(args)
    witnesses = [list(connected_at(pair, i).witnesses) for i in range(pair.r + 1)]
    rows = [{"i": i, "witnesses": w, "connectedAt": bool(w)} for i, w in enumerate(witnesses)]
    payload = {"pair": pair.to_dict(), "connected": is_connected(pair), "witnesses": witnesses}
    _emit(out, args.format, payload, rows=rows if args.format == "csv" else None)
    return 0


def cmd_construct(args, out):
    pair = _pair(args)
    trace = build_trace(pair)
    triple = build_optimal_triple(pair, trace)
    payload = {
        "pair": pair.to_dict(),
        "triple": triple.to_dict(),
        "dimension": dimension(pair, triple),
        "sigma": ramification_sum(pair),
    }
    if args.trace:
        payload["trace"] = trace.to_dict()
    _emit(out, args.format, payload)
    return 0


def cmd_dim(args, out):
    pair = _pair(args)
    if args.triple is None:
        best, arg = max_dimension(pair)
        payload = {"pair": pair.to_dict(), "maxDimension": best, "argmax": arg.to_dict(), "sigma": ramification_sum(pair)}
        _emit(out, args.format, payload)
        return 0
    triple = _triple(args)
    bad = check_admissible(pair, triple)
    if bad:
        raise NotAdmissible(bad)
    sync = sync_map(pair, triple)
    payload = {
        "pair": pair.to_dict(),
        "triple": triple.to_dict(),
        "dimension": dimension(pair, triple),
        "dimensionViaSync": dimension_via_sync(pair, triple),
        "sigma": ramification_sum(pair),
        "Jdiag": sorted(sync.Jdiag),
        "Joff": sorted(sync.Joff),
    }
    _emit(out, args.format, payload)
    return 0


def cmd_enumerate(args, out):
    if args.pair is not None:
        pair = _pair(args)
        rows = [
            {**t.to_dict(), "dimension": dimension_unchecked(pair, t)}
            for t in enumerate_triples(pair)
        ]
        payload = {"pair": pair.to_dict(), "count": len(rows), "triples": rows}
        fields = ["betaY", "betaZ", "eps", "dimension"]
    else:
        if args.r is None or args.d is None:
            raise InputError("enumerate needs either --pair or both --r and --d")
        budget = _budget(args)
        if args.d > budget:
            raise BudgetExceeded(args.d, budget)
        rows = [
            {**p.to_dict(), "sigma": ramification_sum(p), "connected": is_connected(p), "refined": is_refined(p)}
            for p in enumerate_pairs(args.r, args.d)
        ]
        payload = {"r": args.r, "d": args.d, "count": len(rows), "pairs": rows}
        fields = ["r", "d", "aY", "aZ", "sigma", "connected", "refined"]
    if args.format == "csv":
        _emit(out, "csv", payload, rows=rows, fields=fields)
    elif args.format == "text":
        out.write(f"count: {payload['count']}\n")
        for row in rows:
            out.write(" ".join(f"{k}={_scalar(row[k])}" for k in fields) + "\n")
    else:
        _emit(out, "json", payload)
    return 0


def _budget(args) -> int:
    return args.budget if args.budget is not None else default_budget()


def cmd_verify(args, out):
    if args.r is None or args.d is None:
        raise InputError("verify needs --r and --d")
    err = sys.stderr

    def progress(n, pair):
        if args.progress:
            err.write(f"[{n + 1}] {pair}\n")

    report = sweep(
        args.r,
        args.d,
        bound=args.check in ("both", "bound"),
        equivalence=args.check in ("both", "equivalence"),
        budget=_budget(args),
        workers=args.parallel,
        progress=progress,
    )
    err.write(
        f"verified r={args.r} d={args.d}: {report.pairs_checked} pairs, "
        f"{report.triples_checked} triples, {len(report.violations)} violations, "
        f"{len(report.equivalence_failures)} equivalence failures\n"
    )
    if args.format == "csv":
        _emit(out, "csv", {}, rows=report.csv_rows(), fields=list(report.CSV_FIELDS))
    else:
        _emit(out, args.format, report.to_dict())
    return 0 if report.ok else 1


def cmd_classify(args, out):
    pair = _pair(args)
    if args.g is None:
        raise InputError("classify needs --g")
    rep = classify(pair, args.g, args.policy)
    policy = NonemptyPolicy(args.policy)
    payload = {"pair": pair.to_dict(), "g": args.g, "report": rep.to_dict(), "heuristic": policy.heuristic}
    if args.format == "json":
        _emit(out, "json", payload)
    elif args.format == "csv":
        _emit(out, "csv", {}, rows=[{**pair.to_dict(), "g": args.g, **rep.to_dict()}])
    else:
        _emit(out, "text", rep.to_dict())
        if policy.heuristic:
            out.write("note: nonempty is a heuristic (rho - sigma >= 0), not a proven criterion\n")
    if args.expect_open and not rep.openSubset:
        return 1
    return 0


COMMANDS = {
    "validate": cmd_validate,
    "connect": cmd_connect,
    "construct": cmd_construct,
    "dim": cmd_dim,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
    "classify": cmd_classify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lls", description="Strata of limit linear series on a two-component curve.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        return p

    pair_help = 'pair as inline JSON {"r":..,"d":..,"aY":[..],"aZ":[..]} or a path to a JSON file'
    for name, help_ in (
        ("validate", "check (A1)-(A3) and print derived data"),
        ("connect", "connectedness witnesses per index"),
        ("construct", "build the optimal triple of a connected pair"),
        ("dim", "stratum dimension of a triple, or the maximum over all triples"),
        ("classify", "numerical moduli data and open-subset verdict"),
    ):
        p = add(name, help_)
        p.add_argument("--pair", required=True, help=pair_help)
        if name == "construct":
            p.add_argument("--trace", action="store_true", help="also print the construction trace")
        if name == "dim":
            p.add_argument("--triple", help='{"betaY": [..], "betaZ": [..], "eps": [..]} inline or file')
        if name == "classify":
            p.add_argument("--g", type=int, required=True, help="genus")
            p.add_argument("--policy", choices=[p_.value for p_ in NonemptyPolicy], default=DEFAULT_POLICY.value)
            p.add_argument("--expect-open", action="store_true", help="exit 1 unless openSubset is true")

    p = add("enumerate", "list all pairs for (r, d), or all admissible triples of a pair")
    p.add_argument("--pair", help=pair_help)
    p.add_argument("--r", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--budget", type=int, help="largest d allowed (default $LLS_BUDGET or 8)")

    p = add("verify", "exhaustive sweep of the upper bound and the connectedness equivalence")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--check", choices=("both", "bound", "equivalence"), default="both")
    p.add_argument("--budget", type=int, help="largest d allowed (default $LLS_BUDGET or 8)")
    p.add_argument("--parallel", type=int, default=1, help="worker processes")
    p.add_argument("--progress", action="store_true", help="per-pair progress on stderr")
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except LimitSeriesError as exc:
        sys.stderr.write(f"error: {exc}\n")
        if args.command == "validate":
            _emit(out, args.format, {"valid": False, "error": type(exc).__name__, "message": str(exc)})
        elif isinstance(exc, NotAdmissible) and args.format == "json":
            _emit(out, "json", {"admissible": False, "violations": [v.to_dict() for v in exc.violations]})
        return 2


if __name__ == "__main__":
    sys.exit(main())
