"""Random instance generation, the published rate vectors, and instance files.

Generation
----------
The generator is numpy's PCG64 bit generator (``numpy.random.PCG64``) seeded
with the integer seed.  Only its raw 64-bit output is used, and each raw word
``x`` becomes a uniform draw in the open interval (0, 1) as

    u = ((x >> 11) + 0.5) * 2**-53

and then ``low + (high - low) * u``.  Draw order per instance: a0, t0, alpha
(redrawn while <= ``ALPHA_FLOOR``), then b_1 .. b_n.

File format
-----------
An instance is a set of ``key: value`` fields, one per line::

    # comment lines start with '#'
    n: 3
    a0: 1.5
    alpha: 0.5
    t0: 1
    b: 5.5800000000000001 4.0999999999999996 1.8999999999999999

Reals are written with 17 significant digits.  A batch file holds one
instance per line with the same fields separated by ``;`` and an optional
leading ``id: <name>`` field; its ``#`` header records the PRNG and seed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import IO, Iterable, Iterator

import numpy as np

from detsched.model import Instance, validate_instance

PRNG_NAME = "numpy.random.PCG64"
PRNG_VERSION = f"numpy {np.__version__}"
ALPHA_FLOOR = 1e-6
_TWO_POW_M53 = 2.0 ** -53


class BadRange(ValueError):
    pass


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, field: str | None = None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line
        self.field = field


@dataclass(frozen=True)
class GenSpec:
    b_range: tuple[float, float] = (0.0, 6.0)
    a0_range: tuple[float, float] = (0.5, 2.5)
    t0_range: tuple[float, float] = (0.5, 1.5)
    alpha_range: tuple[float, float] = (0.0, 1.0)
    seed: int = 0

    def __post_init__(self) -> None:
        for name in ("b_range", "a0_range", "t0_range", "alpha_range"):
            lo, hi = getattr(self, name)
            if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
                raise BadRange(f"{name} needs finite low < high, got ({lo}, {hi})")
        if self.b_range[0] < 0:
            raise BadRange(f"b_range must be non-negative, got {self.b_range}")
        if self.a0_range[0] < 0:
            raise BadRange(f"a0_range must be non-negative, got {self.a0_range}")
        if self.t0_range[0] < 0:
            raise BadRange(f"t0_range must be non-negative, got {self.t0_range}")
        lo, hi = self.alpha_range
        if lo < 0 or hi > 1 or hi <= ALPHA_FLOOR:
            raise BadRange(f"alpha_range must lie in [0, 1] above {ALPHA_FLOOR}, got {self.alpha_range}")
        if not 0 <= self.seed < 2 ** 64:
            raise BadRange(f"seed must be an unsigned 64-bit integer, got {self.seed}")

    def provenance(self) -> dict[str, str]:
        def fmt(r: tuple[float, float]) -> str:
            return f"({r[0]:g}, {r[1]:g})"

        return {
            "prng": PRNG_NAME,
            "prng_version": PRNG_VERSION,
            "seed": str(self.seed),
            "b_range": fmt(self.b_range),
            "a0_range": fmt(self.a0_range),
            "t0_range": fmt(self.t0_range),
            "alpha_range": fmt(self.alpha_range),
        }


class _Uniform:
    def __init__(self, seed: int):
        self._bits = np.random.PCG64(seed)

    def __call__(self, lo: float, hi: float) -> float:
        x = int(self._bits.random_raw())
        u = ((x >> 11) + 0.5) * _TWO_POW_M53
        return lo + (hi - lo) * u


def generate_instance(spec: GenSpec, n: int) -> Instance:
    if n < 1:
        raise BadRange(f"n must be >= 1, got {n}")
    draw = _Uniform(spec.seed)
    a0 = draw(*spec.a0_range)
    t0 = draw(*spec.t0_range)
    alpha = draw(*spec.alpha_range)
    while alpha <= ALPHA_FLOOR:
        alpha = draw(*spec.alpha_range)
    b = tuple(draw(*spec.b_range) for _ in range(n))
    return Instance(n=n, a0=a0, alpha=alpha, t0=t0, b=b)


def derive_seed(seed: int, *keys: int) -> int:
    """Independent child seed for e.g. (n, replication) from a master seed."""
    state = np.random.SeedSequence([seed, *keys]).generate_state(1, dtype=np.uint64)
    return int(state[0])


_PAPER_RATES: dict[int, tuple[float, ...]] = {
    2: (4.82, 2.98),
    3: (5.58, 4.10, 1.90),
    4: (0.59, 1.02, 2.42, 0.31),
    5: (0.59, 0.47, 1.69, 3.69, 3.63),
    6: (0.40, 3.81, 4.71, 2.96, 0.53, 1.32),
    7: (5.15, 3.28, 5.44, 1.52, 4.45, 1.87, 4.51),
    8: (4.69, 0.06, 3.25, 2.22, 5.66, 0.84, 2.34, 2.78),
    9: (0.46, 2.77, 3.32, 1.78, 4.47, 1.03, 5.17, 1.72, 4.47),
    10: (3.18, 5.28, 1.09, 4.57, 1.68, 0.54, 3.42, 2.64, 2.64, 3.67),
}


def paper_instances() -> list[tuple[int, tuple[float, ...]]]:
    """The nine published deterioration-rate vectors, n = 2..10.

    Only the rates were published; a0, alpha and t0 must come from the caller.
    """
    return sorted(_PAPER_RATES.items())


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _fields(instance: Instance) -> list[tuple[str, str]]:
    return [
        ("n", str(instance.n)),
        ("a0", _fmt(instance.a0)),
        ("alpha", _fmt(instance.alpha)),
        ("t0", _fmt(instance.t0)),
        ("b", " ".join(_fmt(x) for x in instance.b)),
    ]


def format_instance(instance: Instance, header: Iterable[str] = ()) -> str:
    lines = [f"# {h}" for h in header]
    lines += [f"{k}: {v}" for k, v in _fields(instance)]
    return "\n".join(lines) + "\n"


def write_instance(instance: Instance, sink: IO[str], header: Iterable[str] = ()) -> None:
    sink.write(format_instance(instance, header))


def _parse_fields(pairs: Iterable[tuple[int, str]]) -> dict[str, str]:
    raw: dict[str, str] = {}
    for lineno, text in pairs:
        key, sep, value = text.partition(":")
        key = key.strip()
        if not sep or not key:
            raise ParseError(f"expected 'key: value', got {text.strip()!r}", lineno)
        if key in raw:
            raise ParseError(f"duplicate field {key!r}", lineno, key)
        raw[key] = value.strip()
    return raw


def _build(raw: dict[str, str], lineno: int | None) -> Instance:
    for name in ("n", "a0", "alpha", "t0", "b"):
        if name not in raw:
            raise ParseError(f"missing field {name!r}", lineno, name)
    unknown = set(raw) - {"id", "n", "a0", "alpha", "t0", "b"}
    if unknown:
        name = sorted(unknown)[0]
        raise ParseError(f"unknown field {name!r}", lineno, name)
    values: dict[str, object] = {}
    for name, conv in (("n", int), ("a0", float), ("alpha", float), ("t0", float)):
        try:
            values[name] = conv(raw[name])
        except ValueError:
            raise ParseError(f"field {name!r}: cannot parse {raw[name]!r}", lineno, name) from None
    try:
        values["b"] = [float(x) for x in raw["b"].replace(",", " ").split()]
    except ValueError:
        raise ParseError(f"field 'b': cannot parse {raw['b']!r}", lineno, "b") from None
    return validate_instance(values)


def parse_instance(text: str) -> Instance:
    pairs = [
        (i, line)
        for i, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    return _build(_parse_fields(pairs), None)


def read_instance(source: IO[str]) -> Instance:
    return parse_instance(source.read())


@dataclass(frozen=True)
class Record:
    instance_id: str
    instance: Instance


@dataclass
class Batch:
    records: list[Record] = field(default_factory=list)
    header: dict[str, str] = field(default_factory=dict)


def write_batch(batch: Batch, sink: IO[str]) -> None:
    for k, v in batch.header.items():
        sink.write(f"# {k}: {v}\n")
    for rec in batch.records:
        parts = [("id", rec.instance_id)] + _fields(rec.instance)
        sink.write("; ".join(f"{k}: {v}" for k, v in parts) + "\n")


def read_batch(source: IO[str]) -> Batch:
    batch = Batch()
    for lineno, line in enumerate(source, start=1):
        text = line.strip()
        if not text:
            continue
        if text.startswith("#"):
            key, sep, value = text[1:].partition(":")
            if sep:
                batch.header[key.strip()] = value.strip()
            continue
        raw = _parse_fields((lineno, part) for part in text.split(";") if part.strip())
        instance = _build(raw, lineno)
        batch.records.append(Record(raw.get("id", f"#{len(batch.records) + 1}"), instance))
    return batch


def iter_instances(source: IO[str]) -> Iterator[Instance]:
    for rec in read_batch(source).records:
        yield rec.instance
