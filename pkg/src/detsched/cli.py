"""Command-line interface: ``detsched gen | solve | bench``.

Exit codes: 0 success, 1 I/O failure, 2 bad flags or invalid input,
3 enumeration guard tripped (rerun with ``--force``).
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from dataclasses import replace
from pathlib import Path

from detsched.bench import BenchConfig, render_sequences, render_table, run_benchmark
from detsched.instances import (
    Batch,
    GenSpec,
    ParseError,
    Record,
    derive_seed,
    format_instance,
    generate_instance,
    parse_instance,
    read_batch,
    write_batch,
)
from detsched.model import Instance, ValidationError, validate_instance
from detsched.solvers import (
    ENUM_GUARD,
    EnumOptions,
    TooLarge,
    solve_exact_bnb,
    solve_exact_enumeration,
    solve_heuristic,
    solve_ldr,
    solve_sdr,
)

EXIT_OK, EXIT_IO, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3

SOLVERS = ("exact", "bnb", "heuristic", "sdr", "ldr")


class UsageError(Exception):
    pass


def _range(text: str) -> tuple[float, float]:
    try:
        lo, hi = (float(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'low,high', got {text!r}") from None
    return lo, hi


def _floats(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(x) for x in text.replace(",", " ").split())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _n_set(text: str) -> tuple[int, ...]:
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return tuple(range(int(lo), int(hi) + 1))
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'N', 'A..B' or 'A,B,C', got {text!r}") from None


def _add_gen_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--b-range", type=_range, default=(0.0, 6.0), metavar="LO,HI")
    p.add_argument("--a0-range", type=_range, default=(0.5, 2.5), metavar="LO,HI")
    p.add_argument("--t0-range", type=_range, default=(0.5, 1.5), metavar="LO,HI")
    p.add_argument("--alpha-range", type=_range, default=(0.0, 1.0), metavar="LO,HI")


def _gen_spec(args: argparse.Namespace) -> GenSpec:
    try:
        return GenSpec(
            b_range=args.b_range,
            a0_range=args.a0_range,
            t0_range=args.t0_range,
            alpha_range=args.alpha_range,
            seed=args.seed,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="detsched",
        description="Single-machine makespan scheduling with deteriorating jobs and learning.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate random instances")
    gen.add_argument("--n", type=int, required=True, help="number of jobs")
    gen.add_argument("--count", type=int, default=1, help="instances to write; >1 writes a batch file")
    _add_gen_args(gen)
    gen.add_argument("-o", "--output", type=Path, help="output file (default stdout)")

    solve = sub.add_parser("solve", help="solve one instance")
    src = solve.add_argument_group("instance source (exactly one)")
    src.add_argument("--instance", type=Path, help="instance file")
    src.add_argument("--b", type=_floats, help="deterioration rates, e.g. 4.82,2.98")
    src.add_argument("--n", type=int, help="generate a random instance with this many jobs")
    solve.add_argument("--a0", type=float, help="base time (with --b)")
    solve.add_argument("--alpha", type=float, help="learning index (with --b)")
    solve.add_argument("--t0", type=float, help="start time (with --b)")
    _add_gen_args(solve)
    solve.add_argument("--solver", choices=SOLVERS, default="heuristic")
    solve.add_argument("--format", choices=("text", "json"), default="text")
    _add_solver_flags(solve)

    bench = sub.add_parser("bench", help="compare exact, heuristic and SDR solutions")
    bench.add_argument("--n", type=_n_set, default=tuple(range(2, 11)), help="e.g. 2..10 or 3,5,7")
    bench.add_argument("--reps", type=int, default=30, help="replications per n")
    _add_gen_args(bench)
    bench.add_argument("--format", choices=("csv", "markdown"), default="csv")
    bench.add_argument("--sequences", action="store_true", help="append best sequences (markdown only)")
    bench.add_argument("--exact", choices=("enum", "bnb"), default="enum")
    bench.add_argument("-o", "--output", type=Path)
    _add_solver_flags(bench)
    return parser


def _add_solver_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--workers", type=int, default=1, help="enumeration worker processes")
    p.add_argument("--force", action="store_true", help="enumerate beyond the guard")
    p.add_argument("--enum-guard", type=int, default=ENUM_GUARD)
    p.add_argument("--second-smallest-variant", action="store_true")


def _emit(text: str, output: Path | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        output.write_text(text, encoding="utf-8", newline="\n")


def cmd_gen(args: argparse.Namespace) -> int:
    if args.n < 1:
        raise UsageError(f"--n must be >= 1, got {args.n}")
    if args.count < 1:
        raise UsageError(f"--count must be >= 1, got {args.count}")
    spec = _gen_spec(args)
    header = [f"{k}: {v}" for k, v in spec.provenance().items()]
    if args.count == 1:
        text = format_instance(generate_instance(spec, args.n), header)
    else:
        batch = Batch(header=dict(spec.provenance()))
        for i in range(args.count):
            child = replace(spec, seed=derive_seed(spec.seed, args.n, i))
            batch.records.append(Record(f"s{spec.seed}-n{args.n}-r{i}", generate_instance(child, args.n)))
        buf = io.StringIO()
        write_batch(batch, buf)
        text = buf.getvalue()
    for line in header:
        print(f"# {line}", file=sys.stderr)
    _emit(text, args.output)
    return EXIT_OK


def _load_instance(args: argparse.Namespace) -> tuple[Instance, str]:
    sources = [s for s in ("instance", "b", "n") if getattr(args, s) is not None]
    if len(sources) != 1:
        raise UsageError("solve needs exactly one of --instance, --b, --n")
    if args.instance is not None:
        text = args.instance.read_text(encoding="utf-8")
        if any(";" in line for line in text.splitlines() if not line.startswith("#")):
            records = read_batch(iter(text.splitlines())).records
            if len(records) != 1:
                raise UsageError(f"{args.instance} holds {len(records)} instances; solve takes one")
            return records[0].instance, str(args.instance)
        return parse_instance(text), str(args.instance)
    if args.b is not None:
        missing = [k for k in ("a0", "alpha", "t0") if getattr(args, k) is None]
        if missing:
            raise UsageError(f"--b requires --{', --'.join(missing)}")
        raw = {"n": len(args.b), "a0": args.a0, "alpha": args.alpha, "t0": args.t0, "b": args.b}
        return validate_instance(raw), "command line"
    if args.n < 1:
        raise UsageError(f"--n must be >= 1, got {args.n}")
    return generate_instance(_gen_spec(args), args.n), f"generated (seed {args.seed})"


def cmd_solve(args: argparse.Namespace) -> int:
    instance, origin = _load_instance(args)
    options = EnumOptions(workers=args.workers, force=args.force, guard=args.enum_guard)
    if args.solver == "exact":
        outcome = solve_exact_enumeration(instance, options)
    elif args.solver == "bnb":
        outcome = solve_exact_bnb(instance)
    elif args.solver == "heuristic":
        outcome = solve_heuristic(instance, args.second_smallest_variant)
    elif args.solver == "sdr":
        outcome = solve_sdr(instance)
    else:
        outcome = solve_ldr(instance)

    sched = outcome.schedule
    if args.format == "json":
        payload = {
            "source": origin,
            "solver": outcome.solver_id.value,
            "sequence": list(sched.sequence.order),
            "completion_times": list(sched.completion_times),
            "makespan": sched.makespan,
            "wall_time": outcome.wall_time,
            "evaluated": outcome.evaluated,
            "t0_is_zero": instance.starts_at_zero,
        }
        print(json.dumps(payload))
    else:
        print(f"source: {origin}")
        print(f"solver: {outcome.solver_id.value}")
        print(f"sequence: {sched.sequence.labels()}")
        print("completion_times: " + " ".join(f"{c:.6f}" for c in sched.completion_times))
        print(f"makespan: {sched.makespan:.6f}")
        print(f"wall_time: {outcome.wall_time:.6f}")
        if outcome.evaluated is not None:
            print(f"evaluated: {outcome.evaluated}")
    if instance.starts_at_zero:
        print("note: t0 = 0 (machine starts at time zero)", file=sys.stderr)
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    if args.reps < 1:
        raise UsageError(f"--reps must be >= 1, got {args.reps}")
    if not args.n or min(args.n) < 1:
        raise UsageError(f"--n values must be >= 1, got {args.n}")
    config = BenchConfig(
        n_set=args.n,
        replications=args.reps,
        gen_spec=_gen_spec(args),
        exact_solver=args.exact,
        enum_guard=args.enum_guard if not args.force else max(args.n),
        workers=args.workers,
        second_smallest_variant=args.second_smallest_variant,
    )
    table = run_benchmark(config)
    text = render_table(table, args.format)
    if args.format == "markdown":
        prov = ", ".join(f"{k}={v}" for k, v in config.gen_spec.provenance().items())
        text = f"<!-- {prov}, reps={args.reps} -->\n\n" + text
        if args.sequences:
            text += "\n" + render_sequences(table)
    for k, v in config.gen_spec.provenance().items():
        print(f"# {k}: {v}", file=sys.stderr)
    _emit(text, args.output)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {"gen": cmd_gen, "solve": cmd_solve, "bench": cmd_bench}[args.command]
    try:
        return handler(args)
    except TooLarge as exc:
        print(f"error: {exc}; pass --force to enumerate anyway", file=sys.stderr)
        return EXIT_GUARD
    except (UsageError, ValidationError, ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
