"""Two-sequence threshold heuristic.

Both candidate sequences are built greedily.  At position r, with the current
completion time T, the base time ``a0`` is compared against
``swap_threshold(T, alpha, r)``: at or above it the unplaced job with the
largest rate goes next, below it the one with the smallest rate.  The second
candidate differs only in its first pick, taking the second-largest rate
instead of the largest.  The better of the two is returned.

Ties between equal rates always go to the lower job index.
"""

from __future__ import annotations

import time

from detsched.evaluator import SwapPreference, evaluate, position_factors, swap_preference
from detsched.model import Instance, Sequence, SolveOutcome, SolverId


def _by_rate_desc(instance: Instance, jobs: list[int]) -> list[int]:
    return sorted(jobs, key=lambda j: (-instance.b[j], j))


def _by_rate_asc(instance: Instance, jobs: list[int]) -> list[int]:
    return sorted(jobs, key=lambda j: (instance.b[j], j))


def _prefers_largest(instance: Instance, r: int, T: float) -> bool:
    # the printed condition is "a0 >= threshold", so indifference counts as LDR
    return swap_preference(instance, r, T) is not SwapPreference.SDR


def _greedy(instance: Instance, first: int | None) -> Sequence:
    a0, b = instance.a0, instance.b
    pw = position_factors(instance.alpha, instance.n)
    remaining = list(range(instance.n))
    order: list[int] = []
    T = instance.t0
    for r in range(1, instance.n + 1):
        if r == 1 and first is not None:
            j = first
        elif _prefers_largest(instance, r, T):
            j = _by_rate_desc(instance, remaining)[0]
        else:
            j = _by_rate_asc(instance, remaining)[0]
        remaining.remove(j)
        order.append(j)
        T = T + (a0 + b[j] * T) * pw[r - 1]
    return Sequence.from_zero_based(order)


def heuristic_sequence1(instance: Instance) -> Sequence:
    return _greedy(instance, first=None)


def heuristic_sequence2(instance: Instance, second_smallest_variant: bool = False) -> Sequence:
    """Like :func:`heuristic_sequence1` but with a perturbed first pick.

    In the LDR branch the first job is the second element of the
    rate-descending, index-ascending ordering.  In the SDR branch it is the
    smallest-rate job (so the result equals sequence1) unless
    ``second_smallest_variant`` is set, which takes the second-smallest.
    """
    if instance.n == 1:
        return Sequence((1,))
    jobs = list(range(instance.n))
    if _prefers_largest(instance, 1, instance.t0):
        first = _by_rate_desc(instance, jobs)[1]
    elif second_smallest_variant:
        first = _by_rate_asc(instance, jobs)[1]
    else:
        first = _by_rate_asc(instance, jobs)[0]
    return _greedy(instance, first=first)


def solve_heuristic(instance: Instance, second_smallest_variant: bool = False) -> SolveOutcome:
    start = time.perf_counter()
    s1 = evaluate(instance, heuristic_sequence1(instance))
    s2 = evaluate(instance, heuristic_sequence2(instance, second_smallest_variant))
    best = s2 if s2.makespan < s1.makespan else s1
    return SolveOutcome(SolverId.HEURISTIC, best, time.perf_counter() - start)
