"""The five solution methods."""

from detsched.solvers.dispatch import ldr_order, sdr_order, solve_ldr, solve_sdr
from detsched.solvers.exact import (
    ENUM_GUARD,
    EnumOptions,
    TooLarge,
    solve_exact_bnb,
    solve_exact_enumeration,
)
from detsched.solvers.heuristic import (
    heuristic_sequence1,
    heuristic_sequence2,
    solve_heuristic,
)

__all__ = [
    "ENUM_GUARD",
    "EnumOptions",
    "TooLarge",
    "heuristic_sequence1",
    "heuristic_sequence2",
    "ldr_order",
    "sdr_order",
    "solve_exact_bnb",
    "solve_exact_enumeration",
    "solve_heuristic",
    "solve_ldr",
    "solve_sdr",
]
