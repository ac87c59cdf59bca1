"""Command line front end.

stdout carries JSON only; anything meant for humans goes to stderr.
Exit codes: 0 feasible / verified, 1 infeasible / rejected, 2 input error,
3 internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import catalog
from .generators import GenConfig, GenerationError, gen_feasible, gen_infeasible, gen_random
from .model import (
    InputError,
    PrimalWitness,
    RelationKind,
    certificate_to_json,
    dumps,
    proof_from_json,
    system_from_json,
    system_to_json,
    verdict_to_json,
    witness_to_json,
)
from .unified import InconsistentResult, solve_unified
from .verifier import verify, verify_verdict

EXIT_OK, EXIT_NO, EXIT_INPUT, EXIT_BUG = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _load_json(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"{path}: {exc}") from exc


def _load_system(path: str):
    try:
        return system_from_json(_load_json(path))
    except InputError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def cmd_solve(args) -> int:
    s = _load_system(args.system)
    try:
        verdict = solve_unified(s)
    except InconsistentResult as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_BUG
    if args.self_check:
        check = verify_verdict(s, verdict)
        if not check:
            print(f"internal error: own proof rejected: {check.detail}", file=sys.stderr)
            return EXIT_BUG
    print(dumps(verdict_to_json(verdict)))
    return EXIT_OK if verdict.tag == "feasible" else EXIT_NO


def cmd_verify(args) -> int:
    s = _load_system(args.system)
    try:
        proof = proof_from_json(_load_json(args.proof))
        check = verify(s, proof)
    except (InputError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    kind = "witness" if isinstance(proof, PrimalWitness) else "certificate"
    print(f"{kind}: {'valid' if check else 'INVALID ' + check.detail}", file=sys.stderr)
    print(dumps(check.to_json()))
    return EXIT_OK if check else EXIT_NO


def cmd_catalog(args) -> int:
    if args.name is not None:
        named = catalog.named_theorems()
        if args.name not in named:
            raise UsageError(f"unknown theorem {args.name!r}; known: {', '.join(named)}")
        variants = [named[args.name]]
    else:
        variants = catalog.enumerate_variants()
    for v in variants:
        print(dumps(v.to_json()))
    return EXIT_OK


def _parse_rows(text: str) -> dict:
    """``"le=2,lt=1"`` or four comma separated counts ``"m1,m2,m3,m4"``."""
    try:
        if "=" in text:
            pairs = (item.split("=") for item in text.split(",") if item)
            return {RelationKind(k.strip()): int(v) for k, v in pairs}
        counts = [int(v) for v in text.split(",")]
    except ValueError as exc:
        raise UsageError(f"bad --rows {text!r}: {exc}") from exc
    if len(counts) != 4 or min(counts) < 0:
        raise UsageError("--rows needs four nonnegative counts for eq,le,lt,ll")
    return dict(zip(RelationKind, counts))


def cmd_gen(args) -> int:
    cfg = GenConfig(args.seed, args.n, _parse_rows(args.rows), args.coeff, args.nonneg, args.homogeneous)
    try:
        if args.mode == "feasible":
            s, w = gen_feasible(cfg)
            truth = {"expected": "feasible", "proof": witness_to_json(w)}
        elif args.mode == "infeasible":
            s, cert = gen_infeasible(cfg)
            truth = {"expected": "infeasible", "proof": certificate_to_json(cert)}
        else:
            s = gen_random(cfg)
            truth = {"expected": None, "proof": None}
    except GenerationError as exc:
        raise UsageError(str(exc)) from exc
    truth = {"mode": args.mode, "config": cfg.to_json(), **truth}
    text = dumps(system_to_json(s))
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        print(text)
    truth_path = args.truth or (f"{args.out}.truth.json" if args.out else None)
    if truth_path:
        Path(truth_path).write_text(dumps(truth) + "\n")
    return EXIT_OK


def _default_seed() -> int:
    try:
        return int(os.environ.get("ALTERNA_SEED", "0"))
    except ValueError:
        return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="alterna", description="Exact feasibility with checkable proofs.")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("solve", help="decide a system and print a witness or certificate")
    sp.add_argument("system", help="system JSON file ('-' for stdin)")
    sp.add_argument("--no-self-check", dest="self_check", action="store_false",
                    help="skip verifying the proof before printing it")
    sp.set_defaults(func=cmd_solve)

    vp = sub.add_parser("verify", help="check a witness or certificate against a system")
    vp.add_argument("system")
    vp.add_argument("proof", help="JSON with an 'x' (witness) or 'lambda' (certificate) key")
    vp.set_defaults(func=cmd_verify)

    cp = sub.add_parser("catalog", help="list the 60 variants as JSON lines")
    cp.add_argument("--name", help="a single named theorem, e.g. 'Gale I'")
    cp.set_defaults(func=cmd_catalog)

    gp = sub.add_parser("gen", help="generate a seeded instance")
    gp.add_argument("--seed", type=int, default=_default_seed())
    gp.add_argument("--n", type=int, default=2)
    gp.add_argument("--rows", default="0,2,0,0", help="'m1,m2,m3,m4' or 'le=2,ll=1'")
    gp.add_argument("--coeff", type=int, default=3, help="entries drawn from [-c, c]")
    gp.add_argument("--nonneg", action="store_true")
    gp.add_argument("--homogeneous", action="store_true")
    gp.add_argument("--mode", choices=("feasible", "infeasible", "random"), default="random")
    gp.add_argument("--out", help="write the system here instead of stdout")
    gp.add_argument("--truth", help="ground-truth sidecar path (default: <out>.truth.json)")
    gp.set_defaults(func=cmd_gen)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
