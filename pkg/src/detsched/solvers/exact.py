"""Exact solvers: full permutation enumeration and a depth-first branch and bound.

Enumeration walks permutations in lexicographic order.  The last
``min(n, SUFFIX_LEN)`` positions are evaluated as one numpy block per prefix,
using a lexicographically ordered table of suffix permutations, so the first
minimum found is the lexicographically smallest optimal order.  Prefixes can
be split across worker processes; results are merged on
``(makespan, order)`` which makes the answer independent of the split.
"""

from __future__ import annotations

import itertools
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from detsched.evaluator import evaluate, position_factors
from detsched.model import Instance, Sequence, SolveOutcome, SolverId

ENUM_GUARD = 13
SUFFIX_LEN = 8


class TooLarge(ValueError):
    """Enumeration refused because n exceeds the guard."""


@dataclass(frozen=True)
class EnumOptions:
    workers: int = 1
    count_evaluated: bool = True
    guard: int = ENUM_GUARD
    force: bool = False

    def __post_init__(self) -> None:
        if self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}")


@lru_cache(maxsize=None)
def _suffix_table(m: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(m))), dtype=np.intp).reshape(-1, m)


def _search_prefixes(
    instance: Instance, prefixes: list[tuple[int, ...]], m: int
) -> tuple[float, tuple[int, ...], int]:
    """Best (makespan, 0-based order, count) over all completions of ``prefixes``."""
    a0, t0, n = instance.a0, instance.t0, instance.n
    b = instance.b
    b_arr = np.asarray(b, dtype=np.float64)
    pw = position_factors(instance.alpha, n)
    table = _suffix_table(m)
    k = n - m
    best = math.inf
    best_order: tuple[int, ...] = ()
    count = 0
    all_jobs = set(range(n))
    for prefix in prefixes:
        c = t0
        for r, j in enumerate(prefix):
            c = c + (a0 + b[j] * c) * pw[r]
        rest = np.array(sorted(all_jobs.difference(prefix)), dtype=np.intp)
        jobs = rest[table]
        rates = b_arr[jobs]
        cv = np.full(len(table), c)
        for s in range(m):
            cv = cv + (a0 + rates[:, s] * cv) * pw[k + s]
        count += len(table)
        i = int(np.argmin(cv))
        if cv[i] < best:
            best = float(cv[i])
            best_order = tuple(prefix) + tuple(int(j) for j in jobs[i])
    return best, best_order, count


def _chunks(items: list, parts: int) -> list[list]:
    size = -(-len(items) // parts)
    return [items[i:i + size] for i in range(0, len(items), size)]


def solve_exact_enumeration(instance: Instance, options: EnumOptions | None = None) -> SolveOutcome:
    """Evaluate all n! sequences and return the best one.

    Raises :class:`TooLarge` when ``n > options.guard`` unless ``options.force``.
    """
    options = options or EnumOptions()
    n = instance.n
    if n > options.guard and not options.force:
        raise TooLarge(
            f"n = {n} means {math.factorial(n)} permutations; "
            f"guard is n <= {options.guard} (override with force)"
        )
    start = time.perf_counter()
    k = n - min(n, SUFFIX_LEN)
    # deepen the prefix until every worker gets at least one
    while k < n - 1 and math.perm(n, k) < options.workers:
        k += 1
    m = n - k
    prefixes = list(itertools.permutations(range(n), k))
    workers = min(options.workers, len(prefixes))
    if workers == 1:
        results = [_search_prefixes(instance, prefixes, m)]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_search_prefixes, instance, chunk, m)
                for chunk in _chunks(prefixes, workers)
            ]
            results = [f.result() for f in futures]
    best, order, _ = min(results, key=lambda res: (res[0], res[1]))
    count = sum(res[2] for res in results)
    schedule = evaluate(instance, Sequence.from_zero_based(order))
    if schedule.makespan != best:
        raise AssertionError("block evaluation disagrees with evaluate()")
    return SolveOutcome(
        SolverId.EXACT_ENUM,
        schedule,
        time.perf_counter() - start,
        evaluated=count if options.count_evaluated else None,
    )


def solve_exact_bnb(instance: Instance, incumbent: Sequence | None = None) -> SolveOutcome:
    """Depth-first search over prefixes, pruning any prefix whose completion
    time already reaches the incumbent makespan.

    Every processing time is positive, so a prefix's completion time is a
    lower bound on the makespan of all its completions.  ``incumbent``
    seeds the upper bound; without one the search starts from ``inf``.
    """
    start = time.perf_counter()
    n, a0, b = instance.n, instance.a0, instance.b
    pw = position_factors(instance.alpha, n)
    best = math.inf
    best_order: list[int] = []
    if incumbent is not None:
        best = evaluate(instance, incumbent).makespan
        best_order = incumbent.zero_based()

    order: list[int] = []
    used = [False] * n
    nodes = 0

    def dfs(depth: int, c: float) -> None:
        nonlocal best, best_order, nodes
        nodes += 1
        if depth == n:
            if c < best:
                best = c
                best_order = order.copy()
            return
        factor = pw[depth]
        for j in range(n):
            if used[j]:
                continue
            nc = c + (a0 + b[j] * c) * factor
            if nc >= best:
                continue
            used[j] = True
            order.append(j)
            dfs(depth + 1, nc)
            order.pop()
            used[j] = False

    dfs(0, instance.t0)
    schedule = evaluate(instance, Sequence.from_zero_based(best_order))
    return SolveOutcome(SolverId.EXACT_BNB, schedule, time.perf_counter() - start, evaluated=nodes)
