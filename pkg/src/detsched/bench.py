"""Benchmark runner: exact optimum vs heuristic vs SDR on generated instances."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field, replace

from detsched.instances import GenSpec, derive_seed, generate_instance
from detsched.model import Instance, Sequence, SolveOutcome
from detsched.solvers import (
    ENUM_GUARD,
    EnumOptions,
    TooLarge,
    solve_exact_bnb,
    solve_exact_enumeration,
    solve_heuristic,
    solve_sdr,
)

CLAMP_RTOL = 1e-9
CSV_COLUMNS = (
    "n", "instance_id", "mk_exact", "mk_heur", "mk_sdr",
    "t_exact", "t_heur", "t_sdr", "err_heur", "err_sdr",
)


class NonPositiveOptimum(ValueError):
    pass


class ConsistencyError(AssertionError):
    """A heuristic beat the exact solver by more than float noise."""


class UnknownFormat(ValueError):
    pass


class EmptyTable(ValueError):
    pass


def error_percentage(alg_makespan: float, opt_makespan: float) -> float:
    """``100 * (alg - opt) / opt``; float-noise negatives become 0."""
    if not opt_makespan > 0:
        raise NonPositiveOptimum(f"optimal makespan must be > 0, got {opt_makespan}")
    gap = alg_makespan - opt_makespan
    if gap < 0:
        if -gap <= CLAMP_RTOL * opt_makespan:
            return 0.0
        raise ConsistencyError(
            f"makespan {alg_makespan!r} is below the optimum {opt_makespan!r}"
        )
    return 100.0 * gap / opt_makespan


@dataclass(frozen=True)
class BenchRow:
    n: int
    instance_id: str
    makespan_exact: float
    makespan_heuristic: float
    makespan_sdr: float
    time_exact: float
    time_heuristic: float
    time_sdr: float
    err_heuristic: float
    err_sdr: float
    seq_exact: Sequence
    seq_heuristic: Sequence
    seq_sdr: Sequence
    instance: Instance | None = None


@dataclass(frozen=True)
class BenchTable:
    rows: tuple[BenchRow, ...]
    seed: int | None = None

    @property
    def mean_err_heuristic(self) -> float:
        return _mean([r.err_heuristic for r in self.rows])

    @property
    def mean_err_sdr(self) -> float:
        return _mean([r.err_sdr for r in self.rows])


def _mean(values: list[float]) -> float:
    if not values:
        return math.nan
    return math.fsum(values) / len(values)


@dataclass(frozen=True)
class BenchConfig:
    n_set: tuple[int, ...] = tuple(range(2, 11))
    replications: int = 30
    gen_spec: GenSpec = field(default_factory=GenSpec)
    # "enum" or "bnb"
    exact_solver: str = "enum"
    enum_guard: int = ENUM_GUARD
    workers: int = 1
    second_smallest_variant: bool = False


def make_row(
    instance: Instance,
    instance_id: str,
    exact: SolveOutcome,
    heuristic: SolveOutcome,
    sdr: SolveOutcome,
) -> BenchRow:
    opt = exact.makespan
    return BenchRow(
        n=instance.n,
        instance_id=instance_id,
        makespan_exact=opt,
        makespan_heuristic=heuristic.makespan,
        makespan_sdr=sdr.makespan,
        time_exact=exact.wall_time,
        time_heuristic=heuristic.wall_time,
        time_sdr=sdr.wall_time,
        err_heuristic=error_percentage(heuristic.makespan, opt),
        err_sdr=error_percentage(sdr.makespan, opt),
        seq_exact=exact.sequence,
        seq_heuristic=heuristic.sequence,
        seq_sdr=sdr.sequence,
        instance=instance,
    )


def run_benchmark(config: BenchConfig) -> BenchTable:
    """One row per (n, replication), in that order.

    Instance seeds are derived from ``config.gen_spec.seed`` and (n, rep), so
    adding an n or a replication never changes existing rows.
    """
    if config.replications < 1:
        raise ValueError(f"replications must be >= 1, got {config.replications}")
    if config.exact_solver not in ("enum", "bnb"):
        raise ValueError(f"exact_solver must be 'enum' or 'bnb', got {config.exact_solver!r}")
    too_big = [n for n in config.n_set if n > config.enum_guard]
    if too_big and config.exact_solver == "enum":
        raise TooLarge(f"n = {max(too_big)} exceeds the enumeration guard {config.enum_guard}")

    options = EnumOptions(workers=config.workers, guard=config.enum_guard)
    master = config.gen_spec.seed
    rows = []
    for n in config.n_set:
        for rep in range(config.replications):
            spec = replace(config.gen_spec, seed=derive_seed(master, n, rep))
            instance = generate_instance(spec, n)
            if config.exact_solver == "enum":
                exact = solve_exact_enumeration(instance, options)
            else:
                exact = solve_exact_bnb(instance)
            heur = solve_heuristic(instance, config.second_smallest_variant)
            sdr = solve_sdr(instance)
            rows.append(make_row(instance, f"s{master}-n{n}-r{rep}", exact, heur, sdr))
    return BenchTable(rows=tuple(rows), seed=master)


def _cells(row: BenchRow) -> list[str]:
    return [
        str(row.n),
        row.instance_id,
        f"{row.makespan_exact:.3f}",
        f"{row.makespan_heuristic:.3f}",
        f"{row.makespan_sdr:.3f}",
        f"{row.time_exact:.2f}",
        f"{row.time_heuristic:.2f}",
        f"{row.time_sdr:.2f}",
        f"{row.err_heuristic:.2f}",
        f"{row.err_sdr:.2f}",
    ]


def _mean_cells(table: BenchTable) -> list[str]:
    rows = table.rows
    return [
        "mean", "", "", "", "",
        f"{_mean([r.time_exact for r in rows]):.2f}",
        f"{_mean([r.time_heuristic for r in rows]):.2f}",
        f"{_mean([r.time_sdr for r in rows]):.2f}",
        f"{table.mean_err_heuristic:.2f}",
        f"{table.mean_err_sdr:.2f}",
    ]


def render_table(table: BenchTable, fmt: str = "csv") -> str:
    if fmt not in ("csv", "markdown"):
        raise UnknownFormat(f"unknown format {fmt!r}; use 'csv' or 'markdown'")
    if not table.rows:
        raise EmptyTable("benchmark table has no rows")
    body = [_cells(r) for r in table.rows] + [_mean_cells(table)]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        writer.writerows(body)
        return buf.getvalue()
    lines = ["| " + " | ".join(CSV_COLUMNS) + " |", "|" + "---|" * len(CSV_COLUMNS)]
    lines += ["| " + " | ".join(cells) + " |" for cells in body]
    return "\n".join(lines) + "\n"


def render_sequences(table: BenchTable) -> str:
    """Best sequence per method, one markdown row per instance."""
    lines = ["| n | instance_id | exact | heuristic | SDR |", "|---|---|---|---|---|"]
    for r in table.rows:
        lines.append(
            f"| {r.n} | {r.instance_id} | {r.seq_exact.labels()} | "
            f"{r.seq_heuristic.labels()} | {r.seq_sdr.labels()} |"
        )
    return "\n".join(lines) + "\n"
