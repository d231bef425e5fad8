"""SDR and LDR dispatch rules."""

from __future__ import annotations

import time

from detsched.evaluator import evaluate
from detsched.model import Instance, Sequence, SolveOutcome, SolverId


def sdr_order(instance: Instance) -> Sequence:
    # ascending rate, ties by ascending job index
    jobs = sorted(range(instance.n), key=lambda j: (instance.b[j], j))
    return Sequence.from_zero_based(jobs)


def ldr_order(instance: Instance) -> Sequence:
    # descending rate, ties by ascending job index
    jobs = sorted(range(instance.n), key=lambda j: (-instance.b[j], j))
    return Sequence.from_zero_based(jobs)


def solve_sdr(instance: Instance) -> SolveOutcome:
    start = time.perf_counter()
    schedule = evaluate(instance, sdr_order(instance))
    return SolveOutcome(SolverId.SDR, schedule, time.perf_counter() - start)


def solve_ldr(instance: Instance) -> SolveOutcome:
    start = time.perf_counter()
    schedule = evaluate(instance, ldr_order(instance))
    return SolveOutcome(SolverId.LDR, schedule, time.perf_counter() - start)
