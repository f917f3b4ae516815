"""Exact combinatorics of parking sequences for cars of different sizes.

Simulation of the parking rule on linear and circular lots, closed-form
counts, the movable-divider decoder and exactly-uniform samplers, and a
brute-force verification oracle.
"""

from .core import (
    Collision,
    Layout,
    Parked,
    ParkResult,
    PastEnd,
    PrefSequence,
    SizeVector,
    is_classical_parking_function,
    is_parking_sequence,
    simulate_linear,
)
from .counting import count_circular, count_classical, count_linear, option_count
from .circular import (
    empty_spot,
    restrict_to_linear,
    rotate,
    simulate_circular,
    wrap_spot,
)
from .divider import (
    CarOption,
    Cruise,
    Direct,
    OptionSequence,
    decode,
    enumerate_option_sequences,
    options_for_car,
    sample_circular,
    sample_linear,
)
from .bruteforce import (
    BudgetExceededError,
    EnumerationReport,
    compositions,
    enumerate_parking_sequences,
    verify,
    verify_sweep,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "CarOption",
    "Collision",
    "Cruise",
    "Direct",
    "EnumerationReport",
    "Layout",
    "OptionSequence",
    "Parked",
    "ParkResult",
    "PastEnd",
    "PrefSequence",
    "SizeVector",
    "compositions",
    "count_circular",
    "count_classical",
    "count_linear",
    "decode",
    "empty_spot",
    "enumerate_option_sequences",
    "enumerate_parking_sequences",
    "is_classical_parking_function",
    "is_parking_sequence",
    "option_count",
    "options_for_car",
    "restrict_to_linear",
    "rotate",
    "sample_circular",
    "sample_linear",
    "simulate_circular",
    "simulate_linear",
    "verify",
    "verify_sweep",
    "wrap_spot",
]
