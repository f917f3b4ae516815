"""Brute-force ground truth over the full preference-tuple domain.

Every tuple in [1, T]^n (linear) or [1, M]^n (circular) is classified as
parked, collision, or past-end, and the parked tally is compared against
the closed-form count. The tally walks reachable occupancy states instead
of materializing each tuple (a failed prefix fails every extension the
same way, and distinct prefixes with equal occupancy behave identically
from then on), which gives per-tuple-exact tallies without per-tuple work.
The tests cross-check it against a literal one-simulation-per-tuple loop.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .core import Flavor, Parked, PrefSequence, SizeVector, simulate_linear
from .circular import simulate_circular
from .counting import count_circular, count_linear

DEFAULT_BUDGET = 10**8


class BudgetExceededError(Exception):
    """Raised instead of silently truncating an enumeration."""

    def __init__(self, sizes: SizeVector, flavor: Flavor, required: int, budget: int):
        self.sizes = sizes
        self.flavor = flavor
        self.required = required
        self.budget = budget
        super().__init__(
            f"enumeration of sizes={sizes.sizes} ({flavor}) needs "
            f"{required} tuples, budget is {budget}"
        )


@dataclass(frozen=True)
class EnumerationReport:
    sizes: SizeVector
    flavor: Flavor
    total_tuples: int
    parked: int
    collisions: int
    past_end: int
    formula_value: int
    match: bool


def _check_budget(sizes: SizeVector, flavor: Flavor, budget: int) -> int:
    base = sizes.total if flavor == "linear" else sizes.circle_size
    required = base**sizes.n
    if required > budget:
        raise BudgetExceededError(sizes, flavor, required, budget)
    return base


_PAST_END = -1
_COLLISION = -2


def _place_linear(mask: int, pref: int, size: int, total: int) -> int:
    """Park one car on occupancy bitmask `mask` (bit s-1 = spot s taken).

    Returns the new mask, or _PAST_END / _COLLISION.
    """
    j = pref
    while j <= total and (mask >> (j - 1)) & 1:
        j += 1
    if j + size - 1 > total:
        return _PAST_END
    block = ((1 << size) - 1) << (j - 1)
    if mask & block:
        return _COLLISION
    return mask | block


def _place_circular(mask: int, pref: int, size: int, m: int) -> int:
    j = pref
    while (mask >> (j - 1)) & 1:
        j = j % m + 1
    if j - 1 + size <= m:
        block = ((1 << size) - 1) << (j - 1)
    else:
        head = m - (j - 1)
        block = (((1 << head) - 1) << (j - 1)) | ((1 << (size - head)) - 1)
    if mask & block:
        return _COLLISION
    return mask | block


def _tally(
    sizes: SizeVector, flavor: Flavor, first_lo: int, first_hi: int
) -> tuple[int, int, int]:
    """Classify every tuple whose first coordinate lies in [first_lo, first_hi].

    Returns (parked, collisions, past_end). Tuples are aggregated by the
    occupancy state they reach; counts are exact integers.
    """
    n = sizes.n
    if flavor == "linear":
        base = sizes.total
        place = lambda mask, pref, size: _place_linear(mask, pref, size, base)
    else:
        base = sizes.circle_size
        place = lambda mask, pref, size: _place_circular(mask, pref, size, base)

    parked = collisions = past_end = 0
    states: dict[int, int] = {0: 1}
    for depth, size in enumerate(sizes.sizes):
        lo, hi = (first_lo, first_hi) if depth == 0 else (1, base)
        weight = base ** (n - depth - 1)
        nxt: dict[int, int] = {}
        for mask, count in states.items():
            for pref in range(lo, hi + 1):
                outcome = place(mask, pref, size)
                if outcome == _PAST_END:
                    past_end += count * weight
                elif outcome == _COLLISION:
                    collisions += count * weight
                else:
                    nxt[outcome] = nxt.get(outcome, 0) + count
        states = nxt
    parked = sum(states.values())
    return parked, collisions, past_end


def verify(
    sizes: SizeVector,
    flavor: Flavor = "linear",
    budget: int = DEFAULT_BUDGET,
    partitions: int = 1,
) -> EnumerationReport:
    """Exhaustively classify the tuple domain and compare with the formula.

    `partitions` splits the first coordinate into contiguous blocks whose
    tallies are summed; the merged report is identical for any partition
    count (asserted by the tests).
    """
    if partitions < 1:
        raise ValueError("partitions must be >= 1")
    base = _check_budget(sizes, flavor, budget)
    parked = collisions = past_end = 0
    bounds = [1 + (base * k) // partitions for k in range(partitions + 1)]
    for k in range(partitions):
        lo, hi = bounds[k], bounds[k + 1] - 1
        if hi < lo:
            continue
        p, c, e = _tally(sizes, flavor, lo, hi)
        parked += p
        collisions += c
        past_end += e
    formula = count_linear(sizes) if flavor == "linear" else count_circular(sizes)
    return EnumerationReport(
        sizes=sizes,
        flavor=flavor,
        total_tuples=base**sizes.n,
        parked=parked,
        collisions=collisions,
        past_end=past_end,
        formula_value=formula,
        match=parked == formula,
    )


def enumerate_parking_sequences(
    sizes: SizeVector, flavor: Flavor = "linear", budget: int = DEFAULT_BUDGET
) -> Iterator[PrefSequence]:
    """Yield the preference tuples under which all cars park, in
    lexicographic order."""
    base = _check_budget(sizes, flavor, budget)
    simulate = simulate_linear if flavor == "linear" else simulate_circular
    for tup in itertools.product(range(1, base + 1), repeat=sizes.n):
        prefs = PrefSequence(tup, flavor)
        if isinstance(simulate(sizes, prefs), Parked):
            yield prefs


def compositions(max_n: int, max_total: int) -> Iterator[tuple[int, ...]]:
    """All tuples of positive integers with at most max_n parts summing to
    at most max_total, in (n, lexicographic) order."""
    for n in range(1, max_n + 1):
        for total in range(n, max_total + 1):
            for cuts in itertools.combinations(range(1, total), n - 1):
                edges = (0,) + cuts + (total,)
                yield tuple(edges[i + 1] - edges[i] for i in range(n))


@dataclass(frozen=True)
class BijectionReport:
    """Exhaustive evidence that the divider decoder is a bijection."""

    sizes: SizeVector
    option_sequences: int
    distinct_decodes: int
    circular_parking_sequences: int
    linear_parking_sequences: int
    decode_valid: bool
    decode_injective: bool
    image_equals_circular_set: bool
    image_count_matches_formula: bool
    restriction_matches_linear_set: bool
    rotation_invariant: bool

    @property
    def all_pass(self) -> bool:
        return (
            self.decode_valid
            and self.decode_injective
            and self.image_equals_circular_set
            and self.image_count_matches_formula
            and self.restriction_matches_linear_set
            and self.rotation_invariant
        )


def bijection_checks(
    sizes: SizeVector, budget: int = DEFAULT_BUDGET
) -> BijectionReport:
    """Decode every option sequence and compare against brute force.

    Checks decode validity (simulation reproduces the decoded layout),
    injectivity, image = circular parking set = formula count, the
    spot-M-empty restriction against the linear parking set, and closure
    of the circular set under all M rotations.
    """
    from .circular import empty_spot, rotate
    from .divider import decode, enumerate_option_sequences

    _check_budget(sizes, "circular", budget)
    m = sizes.circle_size

    total = 0
    decode_valid = True
    image: set[tuple[int, ...]] = set()
    for opts in enumerate_option_sequences(sizes):
        prefs, layout = decode(sizes, opts)
        total += 1
        image.add(prefs.prefs)
        result = simulate_circular(sizes, prefs)
        if not (isinstance(result, Parked) and result.layout == layout):
            decode_valid = False

    circular_set = {
        p.prefs for p in enumerate_parking_sequences(sizes, "circular", budget)
    }
    linear_set = {
        p.prefs for p in enumerate_parking_sequences(sizes, "linear", budget)
    }
    restricted = set()
    rotation_invariant = True
    for tup in circular_set:
        prefs = PrefSequence(tup, "circular")
        result = simulate_circular(sizes, prefs)
        assert isinstance(result, Parked)
        if empty_spot(result.layout) == m:
            restricted.add(tup)
        for a in range(m):
            if rotate(sizes, prefs, a).prefs not in circular_set:
                rotation_invariant = False
                break

    return BijectionReport(
        sizes=sizes,
        option_sequences=total,
        distinct_decodes=len(image),
        circular_parking_sequences=len(circular_set),
        linear_parking_sequences=len(linear_set),
        decode_valid=decode_valid,
        decode_injective=len(image) == total,
        image_equals_circular_set=image == circular_set,
        image_count_matches_formula=len(image) == count_circular(sizes),
        restriction_matches_linear_set=restricted == linear_set,
        rotation_invariant=rotation_invariant,
    )


def verify_sweep(
    max_n: int,
    max_total: int,
    flavor: Flavor = "linear",
    budget: int = DEFAULT_BUDGET,
) -> list[EnumerationReport]:
    """Run verify over every composition within the bounds."""
    return [
        verify(SizeVector(comp), flavor, budget=budget)
        for comp in compositions(max_n, max_total)
    ]
