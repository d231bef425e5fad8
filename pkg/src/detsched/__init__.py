"""Single-machine makespan scheduling with deteriorating jobs and a
positional learning effect: evaluator, heuristic and exact solvers,
instance generation and a benchmark harness."""

from detsched.evaluator import (
    SwapPreference,
    evaluate,
    pair_completion_delta,
    processing_time,
    swap_preference,
    swap_threshold,
)
from detsched.model import (
    Instance,
    Schedule,
    Sequence,
    SolveOutcome,
    SolverId,
    validate_instance,
    validate_sequence,
)

__version__ = "0.1.0"
