"""Parking on a circular lot of M = T + 1 spots.

With one extra spot and no lot end, every failure is a collision, and a
full parking leaves exactly one spot empty. Rotating all preferences by a
fixed offset maps parking sequences to parking sequences; the ones whose
empty spot is M correspond exactly to the linear parking sequences.
"""

from __future__ import annotations

from typing import Optional

from .core import (
    Collision,
    Layout,
    Parked,
    ParkResult,
    PrefSequence,
    SizeVector,
    _check_prefs,
)


def wrap_spot(x: int, modulus: int) -> int:
    """Map an integer to its representative in [1, modulus]."""
    return (x - 1) % modulus + 1


def simulate_circular(sizes: SizeVector, prefs: PrefSequence) -> ParkResult:
    """Run the parking rule on the circle; spot arithmetic is mod M.

    The first-empty-spot scan always terminates because at most T of the
    M = T + 1 spots are ever occupied. Collision is the only failure mode.
    """
    _check_prefs(sizes, prefs, "circular")
    m = sizes.circle_size
    occupied = bytearray(m + 1)  # index 1..m
    starts: list[int] = []
    for i, (c, y) in enumerate(zip(prefs.prefs, sizes.sizes), start=1):
        j = c
        steps = 0
        while occupied[j]:
            j = j % m + 1
            steps += 1
            if steps > m:  # unreachable if the occupancy invariant holds
                raise RuntimeError("scan failed to find an empty spot")
        block = [(j - 1 + k) % m + 1 for k in range(y)]
        for s in block[1:]:
            if occupied[s]:
                return Collision(car=i, first_empty=j, blocked=s)
        for s in block:
            occupied[s] = 1
        starts.append(j)
    return Parked(Layout(sizes, tuple(starts), "circular"))


def rotate(sizes: SizeVector, prefs: PrefSequence, a: int) -> PrefSequence:
    """Add `a` to every preference modulo M, mapped back into [1, M]."""
    m = sizes.circle_size
    return PrefSequence(
        tuple(wrap_spot(c + a, m) for c in prefs.prefs), "circular"
    )


def empty_spot(layout: Layout) -> int:
    """The unique unoccupied spot of a complete circular layout."""
    if layout.flavor != "circular":
        raise ValueError("empty_spot is defined for circular layouts only")
    m = layout.sizes.circle_size
    free = set(range(1, m + 1)) - layout.occupied()
    if len(free) != 1:
        raise ValueError(f"expected exactly one empty spot, found {len(free)}")
    return free.pop()


def restrict_to_linear(
    sizes: SizeVector, prefs: PrefSequence
) -> Optional[PrefSequence]:
    """Reinterpret a circular parking sequence with spot M empty as linear.

    Returns None when the cars do not all park or the empty spot is not M.
    No preference in the returned sequence can be M (that spot stayed
    empty), so all coordinates are within the linear range [1, T].
    """
    result = simulate_circular(sizes, prefs)
    if not isinstance(result, Parked):
        return None
    if empty_spot(result.layout) != sizes.circle_size:
        return None
    return PrefSequence(prefs.prefs, "linear")
