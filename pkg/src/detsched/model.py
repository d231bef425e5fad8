"""Core domain types for single-machine scheduling with deteriorating jobs
and a positional learning effect.

Job indices and positions are 1-based wherever they leave this package
(``Sequence.order``, file formats, printed labels).  Internally the solvers
work with 0-based job indices and convert at the boundary.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Any, Iterable, Mapping


class ValidationError(ValueError):
    """Base class for every rejected instance or sequence."""


class NonPositiveA0(ValidationError):
    pass


class AlphaOutOfRange(ValidationError):
    pass


class NegativeRate(ValidationError):
    pass


class NegativeStart(ValidationError):
    pass


class EmptyJobs(ValidationError):
    pass


class JobCountMismatch(ValidationError):
    pass


class WrongLength(ValidationError):
    pass


class DuplicateJob(ValidationError):
    pass


class IndexOutOfRange(ValidationError):
    pass


@dataclass(frozen=True)
class Instance:
    """One problem: ``n`` jobs sharing base time ``a0``, learning index
    ``alpha``, machine start time ``t0`` and per-job deterioration rates ``b``.

    Construction validates every field; an ``Instance`` that exists is valid.
    """

    n: int
    a0: float
    alpha: float
    t0: float
    b: tuple[float, ...]

    def __post_init__(self) -> None:
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 1:
            raise EmptyJobs(f"n must be a positive integer, got {self.n!r}")
        if not (math.isfinite(self.a0) and self.a0 > 0):
            raise NonPositiveA0(f"a0 must be > 0, got {self.a0!r}")
        if not (self.alpha > 0 and self.alpha <= 1):
            raise AlphaOutOfRange(f"alpha must satisfy 0 < alpha <= 1, got {self.alpha!r}")
        if not (math.isfinite(self.t0) and self.t0 >= 0):
            raise NegativeStart(f"t0 must be >= 0, got {self.t0!r}")
        if len(self.b) != self.n:
            raise JobCountMismatch(f"b has {len(self.b)} entries but n = {self.n}")
        for j, bj in enumerate(self.b, start=1):
            if not (math.isfinite(bj) and bj >= 0):
                raise NegativeRate(f"b_{j} must be >= 0, got {bj!r}")

    @property
    def starts_at_zero(self) -> bool:
        # t0 = 0 is allowed but sits outside the "T > 0" availability assumption
        return self.t0 == 0

    def with_b(self, b: Iterable[float]) -> Instance:
        b = tuple(float(x) for x in b)
        return Instance(n=len(b), a0=self.a0, alpha=self.alpha, t0=self.t0, b=b)


@dataclass(frozen=True)
class Sequence:
    """A processing order; ``order[r - 1]`` is the 1-based job in position r."""

    order: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.order)

    def __iter__(self):
        return iter(self.order)

    @classmethod
    def from_zero_based(cls, jobs: Iterable[int]) -> Sequence:
        return cls(tuple(int(j) + 1 for j in jobs))

    def zero_based(self) -> list[int]:
        return [j - 1 for j in self.order]

    def labels(self) -> str:
        return " ".join(f"J{j}" for j in self.order)


@dataclass(frozen=True)
class Schedule:
    sequence: Sequence
    completion_times: tuple[float, ...]
    makespan: float


class SolverId(str, enum.Enum):
    EXACT_ENUM = "exact_enum"
    EXACT_BNB = "exact_bnb"
    SDR = "sdr"
    LDR = "ldr"
    HEURISTIC = "heuristic"


@dataclass(frozen=True)
class SolveOutcome:
    solver_id: SolverId
    schedule: Schedule
    wall_time: float
    # number of complete sequences evaluated, when the solver counts them
    evaluated: int | None = None

    @property
    def sequence(self) -> Sequence:
        return self.schedule.sequence

    @property
    def makespan(self) -> float:
        return self.schedule.makespan


_INSTANCE_FIELDS = ("n", "a0", "alpha", "t0", "b")


def validate_instance(raw: Mapping[str, Any]) -> Instance:
    """Build an :class:`Instance` from loosely typed fields.

    Missing fields raise ``KeyError`` naming the field.  Values are converted
    with ``int``/``float`` but never clamped.
    """
    for name in _INSTANCE_FIELDS:
        if name not in raw:
            raise KeyError(name)
    n_raw = raw["n"]
    if isinstance(n_raw, float) and not n_raw.is_integer():
        raise EmptyJobs(f"n must be a positive integer, got {n_raw!r}")
    n = int(n_raw)
    if n < 1:
        raise EmptyJobs(f"n must be a positive integer, got {n}")
    return Instance(
        n=n,
        a0=float(raw["a0"]),
        alpha=float(raw["alpha"]),
        t0=float(raw["t0"]),
        b=tuple(float(x) for x in raw["b"]),
    )


def validate_sequence(instance: Instance, order: Iterable[int]) -> Sequence:
    """Check that ``order`` (1-based job indices) is a permutation of 1..n."""
    order = tuple(int(j) for j in order)
    if len(order) != instance.n:
        raise WrongLength(f"sequence has {len(order)} jobs, instance has {instance.n}")
    seen: set[int] = set()
    for j in order:
        if not 1 <= j <= instance.n:
            raise IndexOutOfRange(f"job index {j} outside 1..{instance.n}")
        if j in seen:
            raise DuplicateJob(f"job {j} appears more than once")
        seen.add(j)
    return Sequence(order)
