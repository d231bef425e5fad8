"""Independent reference computations used as test oracles.

Nothing here imports the solver or evaluator code paths.
"""

from __future__ import annotations

import itertools


def straight_line_makespan(a0, alpha, t0, b, order):
    """Completion times by literal substitution: start, add (a0 + b*start) * alpha**(pos-1)."""
    t = t0
    times = []
    for pos, job in enumerate(order, start=1):
        p = (a0 + b[job - 1] * t) * alpha ** (pos - 1)
        t = t + p
        times.append(t)
    return times


def brute_force(a0, alpha, t0, b):
    """(best makespan, lexicographically smallest best order, all makespans)."""
    n = len(b)
    results = {}
    for order in itertools.permutations(range(1, n + 1)):
        results[order] = straight_line_makespan(a0, alpha, t0, b, order)[-1]
    best = min(results.values())
    best_order = min(o for o, v in results.items() if v == best)
    return best, best_order, results


def pair_second_completion(a0, alpha, T, r, first_rate, second_rate):
    """Completion of the second of two adjacent jobs at positions r, r+1 after start T."""
    c1 = T + (a0 + first_rate * T) * alpha ** (r - 1)
    return c1 + (a0 + second_rate * c1) * alpha ** r
