"""The movable-divider construction on the circular lot.

After car 1 parks, the remaining circle is split by n+1 free-moving
dividers into n+1 cells, one already holding car 1. Each later car either
picks an open cell directly or cruises on an earlier car (a target car and
an offset into its block). Exact spot coordinates only materialize once
every car has a cell: each car cell spans that car's size, and the single
never-chosen cell carries the one leftover empty spot.

Car i has exactly option_count(sizes, i) choices, so option sequences are
counted by the circular product formula; decoding them is a bijection onto
circular parking sequences (injectivity plus matching cardinality, both
checked exhaustively in the tests).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from random import Random
from typing import Iterator, Union

from .circular import empty_spot, restrict_to_linear, rotate, wrap_spot
from .core import Layout, PrefSequence, SizeVector


@dataclass(frozen=True)
class Direct:
    """Pick the `interval`-th open cell, counted clockwise from the cell
    just after car 1's cell."""

    interval: int


@dataclass(frozen=True)
class Cruise:
    """Desire spot number `offset` of already-parked car `car` (so the
    decoded preference lands inside that car's final block) and take the
    next open cell clockwise after it."""

    car: int
    offset: int


CarOption = Union[Direct, Cruise]


@dataclass(frozen=True)
class OptionSequence:
    """Car 1's anchor spot plus one CarOption per car 2..n."""

    anchor: int
    options: tuple[CarOption, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "options", tuple(self.options))


def decode(
    sizes: SizeVector, opts: OptionSequence
) -> tuple[PrefSequence, Layout]:
    """Turn an option sequence into a circular parking sequence and its layout.

    Simulating the returned preferences parks every car in exactly the
    returned layout.
    """
    n = sizes.n
    m = sizes.circle_size
    if not 1 <= opts.anchor <= m:
        raise ValueError(f"anchor {opts.anchor} outside [1, {m}]")
    if len(opts.options) != n - 1:
        raise ValueError(f"expected {n - 1} car options, got {len(opts.options)}")

    # cells[p] holds the car index in cell p, or 0 if the cell is open;
    # cell 0 is car 1's cell, and cells are ordered clockwise.
    cells = [0] * (n + 1)
    cells[0] = 1
    cell_of = {1: 0}

    for i, opt in enumerate(opts.options, start=2):
        if isinstance(opt, Direct):
            open_cells = [p for p in range(1, n + 1) if cells[p] == 0]
            if not 1 <= opt.interval <= len(open_cells):
                raise ValueError(
                    f"car {i}: interval {opt.interval} outside "
                    f"[1, {len(open_cells)}]"
                )
            p = open_cells[opt.interval - 1]
        elif isinstance(opt, Cruise):
            if not 1 <= opt.car < i:
                raise ValueError(f"car {i}: cruise target {opt.car} not yet parked")
            if not 1 <= opt.offset <= sizes.sizes[opt.car - 1]:
                raise ValueError(
                    f"car {i}: cruise offset {opt.offset} outside "
                    f"[1, {sizes.sizes[opt.car - 1]}]"
                )
            p = (cell_of[opt.car] + 1) % (n + 1)
            while cells[p] != 0:
                p = (p + 1) % (n + 1)
        else:
            raise ValueError(f"car {i}: unknown option {opt!r}")
        cells[p] = i
        cell_of[i] = p

    # Collapse the dividers: walk clockwise from car 1's cell at the anchor
    # spot; a car cell spans its size, the lone open cell spans one spot.
    starts = [0] * n
    spot = opts.anchor
    for p in range(n + 1):
        car = cells[p]
        if car == 0:
            spot = wrap_spot(spot + 1, m)
        else:
            starts[car - 1] = spot
            spot = wrap_spot(spot + sizes.sizes[car - 1], m)

    prefs = [0] * n
    prefs[0] = opts.anchor
    for i, opt in enumerate(opts.options, start=2):
        if isinstance(opt, Direct):
            prefs[i - 1] = starts[i - 1]
        else:
            # offset k in [1, y_j] points at the k-th spot of car j's block
            prefs[i - 1] = wrap_spot(starts[opt.car - 1] + opt.offset - 1, m)

    return (
        PrefSequence(tuple(prefs), "circular"),
        Layout(sizes, tuple(starts), "circular"),
    )


def options_for_car(sizes: SizeVector, i: int) -> list[CarOption]:
    """All valid choices for car i >= 2: direct interval picks first, then
    cruise targets in (car, offset) order."""
    if not 2 <= i <= sizes.n:
        raise ValueError(f"car index {i} outside [2, {sizes.n}]")
    direct = [Direct(t) for t in range(1, sizes.n + 2 - i + 1)]
    cruise = [
        Cruise(j, k)
        for j in range(1, i)
        for k in range(1, sizes.sizes[j - 1] + 1)
    ]
    return direct + cruise


def enumerate_option_sequences(sizes: SizeVector) -> Iterator[OptionSequence]:
    """Yield every valid option sequence exactly once.

    Total count equals the circular product formula.
    """
    per_car = [options_for_car(sizes, i) for i in range(2, sizes.n + 1)]
    for anchor in range(1, sizes.circle_size + 1):
        for combo in itertools.product(*per_car):
            yield OptionSequence(anchor, combo)


def _sample_decoded(
    sizes: SizeVector, rng: Random
) -> tuple[PrefSequence, Layout]:
    anchor = rng.randrange(1, sizes.circle_size + 1)
    options = []
    for i in range(2, sizes.n + 1):
        choices = options_for_car(sizes, i)
        options.append(choices[rng.randrange(len(choices))])
    return decode(sizes, OptionSequence(anchor, tuple(options)))


def sample_circular(sizes: SizeVector, rng: Random) -> PrefSequence:
    """Draw a circular parking sequence exactly uniformly.

    The anchor and each car option are drawn independently and uniformly;
    decode is injective, so all outputs have equal probability.
    """
    prefs, _ = _sample_decoded(sizes, rng)
    return prefs


def sample_linear(sizes: SizeVector, rng: Random) -> PrefSequence:
    """Draw a linear parking sequence exactly uniformly.

    Rotating a uniform circular sample so its empty spot lands on M picks
    the unique such representative of its rotation orbit; orbits all have
    size M, so uniformity is preserved.
    """
    prefs, layout = _sample_decoded(sizes, rng)
    e = empty_spot(layout)
    aligned = rotate(sizes, prefs, sizes.circle_size - e)
    linear = restrict_to_linear(sizes, aligned)
    if linear is None:  # decode guarantees this cannot happen
        raise RuntimeError("rotated sample failed to restrict to linear")
    return linear
