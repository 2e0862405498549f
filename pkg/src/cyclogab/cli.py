"""Command-line front end: check patterns, build codes, certify, run the oracle.

Every command reads and writes JSON.  All randomness descends from the single
--seed value (draw attempt a uses sample seed ``seed + a``), and output files
are emitted with sorted keys, so identical invocations produce byte-identical
files.

Exit codes: 0 on success / condition holds, 1 when the condition fails or a
certificate does not pass, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .certify import build_subcode, certify_mrd
from .construction import ConstructionResult, RetriesExhausted, construct, required_sample_size
from .cyclotomic import GaloisContext
from .gmmds import oracle_report, sweep_agreement
from .supports import SupportSpec, check_condition, complete_sets, required_dimension

MINOR_SWEEP_AUTO_LIMIT = 12  # default the full minor sweep on for n <= 12


@dataclass(frozen=True)
class JobConfig:
    """Resolved inputs of a construction run."""

    ctx: GaloisContext
    spec: SupportSpec
    s_size: int
    epsilon: str | None
    seed: int
    max_retries: int
    check_minors: bool
    out: Path | None


def _dump(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _write(out_dir: Path, name: str, obj: dict) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / name).write_text(_dump(obj), encoding="utf-8")


def _load_spec(args: argparse.Namespace) -> SupportSpec:
    if args.zeros is not None:
        with open(args.zeros, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
        spec = SupportSpec.from_obj(obj)
        if args.n is not None and args.n != spec.n:
            raise ValueError(f"--n {args.n} does not match the pattern file (n={spec.n})")
        if args.k is not None and args.k != spec.k:
            raise ValueError(f"--k {args.k} does not match the pattern file (k={spec.k})")
        return spec
    if args.n is None or args.k is None:
        raise ValueError("provide --zeros FILE, or both --n and --k for an empty pattern")
    return SupportSpec(args.n, args.k, [()] * args.k)


def _job_config(args: argparse.Namespace) -> JobConfig:
    ctx = GaloisContext(args.prime)
    spec = _load_spec(args)
    if spec.n > ctx.m:
        raise ValueError(f"need n <= p-1 = {ctx.m}, got n={spec.n}")
    if args.s_size is not None:
        s_size, epsilon = args.s_size, None
    else:
        epsilon = args.epsilon
        s_size = required_sample_size(spec.n, spec.k, Fraction(epsilon))
    check_minors = args.check_minors if args.check_minors is not None \
        else spec.n <= MINOR_SWEEP_AUTO_LIMIT
    return JobConfig(ctx=ctx, spec=spec, s_size=s_size, epsilon=epsilon, seed=args.seed,
                     max_retries=args.max_retries, check_minors=check_minors,
                     out=Path(args.out) if args.out else None)


def cmd_check(args: argparse.Namespace) -> int:
    spec = _load_spec(args)
    ok, witness = check_condition(spec)
    report = {"condition": ok, "ell": required_dimension(spec)}
    if not ok:
        report["witness_omega"] = sorted(witness or ())
    sys.stdout.write(_dump(report))
    return 0 if ok else 1


def cmd_bound(args: argparse.Namespace) -> int:
    s_size = required_sample_size(args.n, args.k, Fraction(args.epsilon))
    sys.stdout.write(_dump({"n": args.n, "k": args.k, "epsilon": args.epsilon,
                            "s_size": s_size}))
    return 0


def cmd_construct(args: argparse.Namespace) -> int:
    cfg = _job_config(args)
    ok, witness = check_condition(cfg.spec)
    if not ok:
        print(f"support condition violated by rows {sorted(witness or ())}; "
              "no full-distance code exists -- use the 'subcode' command", file=sys.stderr)
        return 1
    try:
        result = construct(cfg.spec, cfg.ctx, cfg.s_size, cfg.seed, cfg.max_retries)
    except RetriesExhausted as exc:
        print(f"construction failed: {exc}", file=sys.stderr)
        return 1
    cert = certify_mrd(result, check_minors=cfg.check_minors)
    result_obj = result.to_obj()
    result_obj["epsilon"] = cfg.epsilon
    if cfg.out is not None:
        _write(cfg.out, "result.json", result_obj)
        _write(cfg.out, "certificate.json", cert.to_obj())
    sys.stdout.write(_dump(cert.to_obj()))
    return 0 if cert.passed else 1


def cmd_subcode(args: argparse.Namespace) -> int:
    cfg = _job_config(args)
    try:
        sub = build_subcode(cfg.spec, cfg.ctx, cfg.s_size, cfg.seed,
                            max_retries=cfg.max_retries, check_minors=cfg.check_minors)
    except RetriesExhausted as exc:
        print(f"construction failed: {exc}", file=sys.stderr)
        return 1
    sub_obj = sub.to_obj()
    sub_obj["epsilon"] = cfg.epsilon
    sub_obj["spec"] = cfg.spec.to_obj()
    if cfg.out is not None:
        _write(cfg.out, "subcode.json", sub_obj)
        _write(cfg.out, "certificate.json", sub.certificate.to_obj())
    sys.stdout.write(_dump(sub.certificate.to_obj()))
    return 0 if sub.certificate.passed else 1


def cmd_certify(args: argparse.Namespace) -> int:
    with open(args.result, "r", encoding="utf-8") as fh:
        result = ConstructionResult.from_obj(json.load(fh))
    check_minors = args.check_minors if args.check_minors is not None \
        else result.spec.n <= MINOR_SWEEP_AUTO_LIMIT
    cert = certify_mrd(result, check_minors=check_minors)
    if args.out is not None:
        _write(Path(args.out), "certificate.json", cert.to_obj())
    sys.stdout.write(_dump(cert.to_obj()))
    return 0 if cert.passed else 1


def cmd_oracle(args: argparse.Namespace) -> int:
    if args.sweep:
        table = sweep_agreement(n=args.n or 4, k=args.k or 3, mode=args.mode, seed=args.seed)
        sys.stdout.write(_dump(table))
        return 0 if not table["disagreements"] else 1
    spec = _load_spec(args)
    if not spec.is_completed():
        if not check_condition(spec)[0]:
            raise ValueError("pattern is neither completed nor completable; "
                             "the oracle needs k-1 zeros per row")
        spec = complete_sets(spec)
        print(f"note: pattern completed to {[sorted(z) for z in spec.zeros]}",
              file=sys.stderr)
    report = oracle_report(spec, mode=args.mode, seed=args.seed)
    sys.stdout.write(_dump(report.to_obj()))
    return 0 if report.det_nonzero else 1


def _add_spec_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--zeros", metavar="FILE", help="zero-pattern JSON file")
    sub.add_argument("--n", type=int, help="column count (validated against --zeros)")
    sub.add_argument("--k", type=int, help="row count (validated against --zeros)")


def _add_run_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--prime", type=int, required=True, help="odd prime conductor p")
    size = sub.add_mutually_exclusive_group(required=True)
    size.add_argument("--epsilon", help="target failure bound in (0, 1], e.g. 0.01")
    size.add_argument("--s-size", dest="s_size", type=int, help="explicit sample-set size")
    sub.add_argument("--seed", type=int, default=0, help="seed for all randomness (default 0)")
    sub.add_argument("--max-retries", type=int, default=64, help="redraw budget (default 64)")
    sub.add_argument("--check-minors", action=argparse.BooleanOptionalAction, default=None,
                     help="force the full minor sweep on/off (default: on for n <= 12)")
    sub.add_argument("--out", metavar="DIR", help="directory for the emitted JSON files")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclogab",
        description="Support-constrained Gabidulin generator matrices over Q(zeta_p), "
                    "built and certified in exact arithmetic.")
    subs = parser.add_subparsers(dest="command", required=True)

    p_check = subs.add_parser("check", help="test the support condition of a pattern")
    _add_spec_args(p_check)
    p_check.set_defaults(func=cmd_check)

    p_bound = subs.add_parser("bound", help="sample-set size needed for a failure bound")
    p_bound.add_argument("--n", type=int, required=True)
    p_bound.add_argument("--k", type=int, required=True)
    p_bound.add_argument("--epsilon", required=True)
    p_bound.set_defaults(func=cmd_bound)

    p_con = subs.add_parser("construct", help="build and certify a full-distance generator")
    _add_spec_args(p_con)
    _add_run_args(p_con)
    p_con.set_defaults(func=cmd_construct)

    p_sub = subs.add_parser("subcode", help="best achievable code for an infeasible pattern")
    _add_spec_args(p_sub)
    _add_run_args(p_sub)
    p_sub.set_defaults(func=cmd_subcode)

    p_cert = subs.add_parser("certify", help="re-certify a stored construction result")
    p_cert.add_argument("result", help="result JSON written by 'construct'")
    p_cert.add_argument("--check-minors", action=argparse.BooleanOptionalAction, default=None)
    p_cert.add_argument("--out", metavar="DIR")
    p_cert.set_defaults(func=cmd_certify)

    p_or = subs.add_parser("oracle", help="polynomial determinant oracle for a pattern")
    _add_spec_args(p_or)
    p_or.add_argument("--mode", choices=("symbolic", "randomized"), default="symbolic")
    p_or.add_argument("--seed", type=int, default=0)
    p_or.add_argument("--sweep", action="store_true",
                      help="run the exhaustive family sweep for --n/--k (default 4/3)")
    p_or.set_defaults(func=cmd_oracle)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
