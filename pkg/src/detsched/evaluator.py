"""Processing times, completion-time recurrence and adjacent-swap analysis.

A job J_j started at time t in position r takes ``(a0 + b_j * t) * alpha**(r - 1)``.
Every function here is pure.  The completion-time step

    C_r = C_{r-1} + (a0 + b_j * C_{r-1}) * alpha**(r - 1)

is written in exactly one order of floating-point operations; the exact
solvers repeat that order so their makespans match :func:`evaluate` bit for bit.
"""

from __future__ import annotations

import enum
import math

from detsched.model import Instance, Schedule, Sequence

INDIFFERENCE_RTOL = 1e-12


class SwapPreference(str, enum.Enum):
    LDR = "LDR"
    SDR = "SDR"
    INDIFFERENT = "Indifferent"


def position_factors(alpha: float, n: int) -> list[float]:
    """``alpha**(r - 1)`` for r = 1..n, indexed from 0."""
    return [alpha ** r for r in range(n)]


def processing_time(instance: Instance, job: int, position: int, start: float) -> float:
    """Processing time of 1-based ``job`` in 1-based ``position`` started at ``start``."""
    if not 1 <= job <= instance.n:
        raise IndexError(f"job {job} outside 1..{instance.n}")
    if position < 1:
        raise ValueError(f"position must be >= 1, got {position}")
    if start < 0:
        raise ValueError(f"start time must be >= 0, got {start}")
    return (instance.a0 + instance.b[job - 1] * start) * instance.alpha ** (position - 1)


def completion_times(instance: Instance, jobs0: list[int]) -> list[float]:
    """Completion times for 0-based job indices, starting from ``t0``."""
    a0, b = instance.a0, instance.b
    pw = position_factors(instance.alpha, len(jobs0))
    c = instance.t0
    out = []
    for r, j in enumerate(jobs0):
        c = c + (a0 + b[j] * c) * pw[r]
        out.append(c)
    return out


def evaluate(instance: Instance, sequence: Sequence) -> Schedule:
    times = completion_times(instance, sequence.zero_based())
    return Schedule(sequence=sequence, completion_times=tuple(times), makespan=times[-1])


def makespan(instance: Instance, sequence: Sequence) -> float:
    return evaluate(instance, sequence).makespan


def swap_threshold(T: float, alpha: float, r: int) -> float:
    """Critical base time ``T * (1 - alpha) / alpha**r`` for positions r, r + 1.

    Returns ``inf`` if ``alpha**r`` underflows to zero while the numerator is
    positive.
    """
    if alpha == 1 or T == 0:
        return 0.0
    denom = alpha ** r
    if denom == 0.0:
        return math.inf
    return T * (1 - alpha) / denom


def swap_preference(instance: Instance, r: int, T: float) -> SwapPreference:
    """Which of two adjacent jobs should go first at position r, start T.

    LDR: the larger deterioration rate first; SDR: the smaller first.
    """
    threshold = swap_threshold(T, instance.alpha, r)
    a0 = instance.a0
    if math.isclose(a0, threshold, rel_tol=INDIFFERENCE_RTOL, abs_tol=0.0):
        return SwapPreference.INDIFFERENT
    return SwapPreference.LDR if a0 > threshold else SwapPreference.SDR


def pair_completion_delta(
    instance: Instance, r: int, T: float, b_k: float, b_l: float
) -> float:
    """Closed-form ``C_k(l, k) - C_l(k, l)`` for two adjacent jobs.

    Jobs k and l occupy positions r and r + 1 after a prefix finishing at T.
    The value is the second job's completion when l goes first minus its
    completion when k goes first, so a positive result favours k first.
    """
    alpha, a0 = instance.alpha, instance.a0
    bracket = T * alpha ** r - T * alpha ** (r - 1) + a0 * alpha ** (2 * r - 1)
    return (b_k - b_l) * bracket
