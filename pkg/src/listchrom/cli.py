"""Command-line surface.

Reports go to stdout as JSON lines, one RunReport per task; a short human
summary goes to stderr.  Exit code 0 = ok, 1 = a verification found a
violation (the report embeds a reproducer), 2 = usage error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time

from . import verification
from .errors import ListChromError, NotFound
from .graphs import classify, realize, spec_from_json, spec_to_json
from .lists import (
    assignment_from_json,
    colouring_to_json,
    random_assignment,
    validate,
)
from .oracle import enumerate_bad_sets
from .paths import (
    colour_path,
    damage,
    damage_closed_form,
    decide_colourable,
    path_instance_from_json,
    profile,
)
from .colourer import colour_family


def _digest(obj) -> str:
    return hashlib.sha256(json.dumps(obj, sort_keys=True).encode()).hexdigest()[:16]


def _report(command: str, input_obj, outcome: str, payload: dict, started: float) -> dict:
    return {
        "command": command,
        "inputDigest": _digest(input_obj),
        "outcome": outcome,
        "payload": payload,
        "elapsed": int((time.monotonic() - started) * 1000),
    }


def _emit(report: dict) -> None:
    print(json.dumps(report, sort_keys=True))


def _load_json_arg(args, attr: str):
    raw = getattr(args, attr)
    if raw.startswith("@"):
        with open(raw[1:]) as fh:
            return json.load(fh)
    return json.loads(raw)


def _load_instance(args):
    if getattr(args, "instance", None):
        with open(args.instance) as fh:
            return json.load(fh)
    return json.loads(args.json)


def cmd_classify(args) -> int:
    started = time.monotonic()
    spec_obj = _load_json_arg(args, "spec")
    cls = classify(spec_from_json(spec_obj))
    _emit(_report("classify", spec_obj, "ok", cls.to_json(), started))
    print(f"classify: {cls.kind} {cls.detail}", file=sys.stderr)
    return 0


def cmd_path_check(args) -> int:
    started = time.monotonic()
    obj = _load_instance(args)
    p = path_instance_from_json(obj)
    prof = profile(p)
    payload: dict = {
        "n": p.n,
        "m": p.m,
        "X": [sorted(x) for x in prof.X],
        "S_L": prof.s_l,
        "colourable": decide_colourable(p),
    }
    if prof.odd:
        payload["lambda"] = sorted(prof.lam)
        payload["X1hat"] = sorted(prof.x1_hat)
        payload["Xnhat"] = sorted(prof.xn_hat)
    if args.colour and payload["colourable"]:
        payload["colouring"] = colouring_to_json(colour_path(p))
    _emit(_report("path-check", obj, "ok", payload, started))
    print(f"path-check: S_L={prof.s_l} colourable={payload['colourable']}", file=sys.stderr)
    return 0


def cmd_colour(args) -> int:
    started = time.monotonic()
    spec_obj = _load_json_arg(args, "spec")
    spec = spec_from_json(spec_obj)
    g = realize(spec)
    if args.instance:
        with open(args.instance) as fh:
            la = assignment_from_json(json.load(fh))
    else:
        la = random_assignment(g, 4 * args.m, args.universe, args.seed)
    phi = colour_family(spec, la, args.m)
    assert validate(g, la, phi)
    payload = {
        "spec": spec_obj,
        "m": args.m,
        "assignment": {str(v): sorted(la.lists[v]) for v in range(la.n)},
        "colouring": colouring_to_json(phi),
    }
    input_obj = {"spec": spec_obj, "m": args.m, "seed": args.seed}
    _emit(_report("colour", input_obj, "ok", payload, started))
    print(f"colour: valid {2 * args.m}-fold colouring of {g.n} vertices", file=sys.stderr)
    return 0


def cmd_dam(args) -> int:
    started = time.monotonic()
    obj = _load_instance(args)
    p = path_instance_from_json(obj)
    S = frozenset(json.loads(args.s))
    T = frozenset(json.loads(args.t))
    payload = {"damage": damage(p, S, T)}
    if p.n % 2 == 1:
        payload["closedForm"] = damage_closed_form(profile(p), S, T)
    _emit(_report("dam", {"instance": obj, "S": sorted(S), "T": sorted(T)}, "ok", payload, started))
    print(f"dam: {payload['damage']}", file=sys.stderr)
    return 0


def cmd_bad_sets(args) -> int:
    started = time.monotonic()
    obj = _load_instance(args)
    p = path_instance_from_json(obj)
    W = frozenset(json.loads(args.w))
    report = enumerate_bad_sets(p, W)
    outcome = "ok" if report.ok else "violation"
    _emit(_report("bad-sets", {"instance": obj, "W": sorted(W)}, outcome, report.to_json(), started))
    print(f"bad-sets: count={report.count} bound<{report.bound}", file=sys.stderr)
    return 0 if report.ok else 1


_VERIFY_SWEEPS = {
    "lemma4": lambda a: verification.sweep_path_criterion(a.seed, a.trials),
    "lemma7": lambda a: verification.sweep_damage_closed_form(a.seed, a.trials),
    "lemma8": lambda a: verification.sweep_profile_bound(a.seed, a.trials),
    "lemma11": lambda a: verification.sweep_bad_sets(a.seed, a.trials),
    "lemma9": lambda a: verification.sweep_inequality(a.max_m or 5),
    "monotonicity": lambda a: verification.sweep_monotonicity(a.max_m or 4),
    "ctx": lambda a: verification.sweep_convolution(a.max_m or 4),
    "theorem2": lambda a: verification.sweep_family_colourings(a.seed, a.trials),
}


def cmd_verify(args) -> int:
    started = time.monotonic()
    result = _VERIFY_SWEEPS[args.statement](args)
    bad = result.get("violations") or result.get("mismatches") or result.get("failures")
    outcome = "violation" if bad else "ok"
    input_obj = {
        "statement": args.statement,
        "seed": args.seed,
        "trials": args.trials,
        "maxM": args.max_m,
    }
    _emit(_report(f"verify {args.statement}", input_obj, outcome, result, started))
    summary = {k: v for k, v in result.items() if isinstance(v, (int, float))}
    print(f"verify {args.statement}: {outcome} {summary}", file=sys.stderr)
    return 0 if outcome == "ok" else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="listchrom")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify a family spec")
    p.add_argument("--spec", required=True, help="family JSON (or @file)")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("path-check", help="path profile and colourability")
    p.add_argument("--instance", help="path instance JSON file")
    p.add_argument("--json", help="inline path instance JSON")
    p.add_argument("--colour", action="store_true", help="also emit a colouring")
    p.set_defaults(func=cmd_path_check)

    p = sub.add_parser("colour", help="colour a family end to end")
    p.add_argument("--spec", required=True)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--universe", type=int, default=None)
    p.add_argument("--instance", help="list assignment JSON file")
    p.set_defaults(func=cmd_colour)

    p = sub.add_parser("dam", help="endpoint-deletion damage of a path")
    p.add_argument("--instance")
    p.add_argument("--json")
    p.add_argument("--s", required=True, help="JSON array of colours")
    p.add_argument("--t", required=True, help="JSON array of colours")
    p.set_defaults(func=cmd_dam)

    p = sub.add_parser("bad-sets", help="census of blocking endpoint subsets")
    p.add_argument("--instance")
    p.add_argument("--json")
    p.add_argument("--w", required=True, help="JSON array: the 4m-colour pool")
    p.set_defaults(func=cmd_bad_sets)

    p = sub.add_parser("verify", help="run a verification sweep")
    p.add_argument("statement", choices=sorted(_VERIFY_SWEEPS))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--max-m", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    if args.command == "colour" and args.universe is None:
        args.universe = 8 * args.m
    try:
        return args.func(args)
    except NotFound as exc:
        print(f"violation: {exc}", file=sys.stderr)
        return 1
    except (ListChromError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
