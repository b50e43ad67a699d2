"""Command-line interface.

Subcommands: `solve` an instance file, `oracle` (full enumeration), `gen`
(seeded instance generator), `bench` (timing harness over a JSON list of
generator specs), `selftest` (built-in regression suite).

Exit codes: 0 success, 1 invalid instance or bad configuration, 2 internal
contract violation.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import selftest
from .fileio import GeneratorSpec, emit_result, generate, parse_instance, ParseError
from .solver import InvalidInstanceError, SolverConfig, auto_delta, oracle_solve, solve


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="omuco",
        description="Exact solver for combinatorial problems with up to two "
        "ordinal objectives and one real-valued sum objective.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve an instance file")
    p_solve.add_argument("file", type=Path)
    p_solve.add_argument("--algorithm", choices=("auto", "epsilon", "greedy", "brute"),
                         default="auto")
    p_solve.add_argument("--augment", metavar="DELTA|auto", default=None,
                         help="augmented scalarizations with this exact rational "
                         "(or 'auto' for 1/((Kt+Kh)*n+1))")
    p_solve.add_argument("--cardinality", type=int, default=None, metavar="W")
    p_solve.add_argument("--format", choices=("table", "csv"), default="table")
    p_solve.add_argument("--out", type=Path, default=None)
    p_solve.add_argument("--workers", type=int, default=1, metavar="K")

    p_oracle = sub.add_parser("oracle", help="solve by full enumeration (ground truth)")
    p_oracle.add_argument("file", type=Path)
    p_oracle.add_argument("--bound", type=int, default=20,
                          help="refuse instances with more items than this")
    p_oracle.add_argument("--format", choices=("table", "csv"), default="table")
    p_oracle.add_argument("--out", type=Path, default=None)

    p_gen = sub.add_parser("gen", help="generate a seeded random instance file")
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--ktilde", type=int, default=1)
    p_gen.add_argument("--khat", type=int, default=1)
    p_gen.add_argument("--alpha", type=int, choices=(-1, 0, 1), required=True)
    p_gen.add_argument("--beta", type=int, choices=(-1, 0, 1), required=True)
    p_gen.add_argument("--gamma", type=int, choices=(-1, 0, 1), required=True)
    p_gen.add_argument("--w", type=int, default=None)
    p_gen.add_argument("--fmax", type=int, default=10)
    p_gen.add_argument("--seed", type=int, required=True)
    p_gen.add_argument("--out", type=Path, required=True)

    p_bench = sub.add_parser("bench", help="run timed solves over a JSON spec list")
    p_bench.add_argument("--spec", type=Path, required=True,
                         help="JSON file: list of generator specs, each optionally "
                         "with 'algorithm' and 'workers'")
    p_bench.add_argument("--out", type=Path, required=True)

    sub.add_parser("selftest", help="run the built-in regression suite")
    return parser


def _write(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def _cmd_solve(args) -> int:
    inst = parse_instance(args.file.read_text())
    if args.cardinality is not None:
        inst = inst.with_cardinality(args.cardinality)
    augment = None
    if args.augment is not None:
        augment = auto_delta(inst) if args.augment == "auto" else Fraction(args.augment)
    cfg = SolverConfig(algorithm=args.algorithm, augment=augment, workers=args.workers)
    result = solve(inst, cfg)
    _write(emit_result(result, args.format, inst), args.out)
    return 0


def _cmd_oracle(args) -> int:
    inst = parse_instance(args.file.read_text())
    result = oracle_solve(inst, bound=args.bound)
    _write(emit_result(result, args.format, inst), args.out)
    return 0


def _cmd_gen(args) -> int:
    spec = GeneratorSpec(
        n=args.n, ktilde=args.ktilde, khat=args.khat,
        alpha=args.alpha, beta=args.beta, gamma=args.gamma,
        w=args.w, fmax=args.fmax, seed=args.seed,
    )
    args.out.write_text(generate(spec))
    return 0


def _cmd_bench(args) -> int:
    configs = json.loads(args.spec.read_text())
    if not isinstance(configs, list):
        raise InvalidInstanceError(("bench spec must be a JSON list",))
    header = ("n,ktilde,khat,alpha,beta,gamma,w,fmax,seed,algorithm,workers,"
              "subproblems,feasible,candidates,nondominated,seconds")
    rows = [header]
    for raw in configs:
        algorithm = raw.pop("algorithm", "auto")
        workers = raw.pop("workers", 1)
        spec = GeneratorSpec(**raw)
        inst = parse_instance(generate(spec))
        started = time.perf_counter()
        result = solve(inst, SolverConfig(algorithm=algorithm, workers=workers))
        elapsed = time.perf_counter() - started
        stats = result.stats
        rows.append(",".join(str(v) for v in (
            spec.n, spec.ktilde, spec.khat, spec.alpha, spec.beta, spec.gamma,
            spec.w if spec.w is not None else "", spec.fmax, spec.seed,
            algorithm, workers,
            stats.subproblems, stats.feasible, stats.candidates,
            len(result.nondominated), f"{elapsed:.6f}",
        )))
    args.out.write_text("\n".join(rows) + "\n")
    return 0


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "solve":
            return _cmd_solve(args)
        if args.command == "oracle":
            return _cmd_oracle(args)
        if args.command == "gen":
            return _cmd_gen(args)
        if args.command == "bench":
            return _cmd_bench(args)
        if args.command == "selftest":
            return 0 if selftest.run() else 2
    except (ParseError, InvalidInstanceError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # internal contract violation
        print(f"internal error: {exc!r}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
