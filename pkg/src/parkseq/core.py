"""Domain types and the linear-lot parking simulator.

Cars of positive integer sizes park, in order, on a row of T = sum(sizes)
spots. Car i drives to its preferred spot, cruises forward to the first
empty spot j, and parks on [j, j + y_i - 1] if that whole block is free.
Anything else is a classified failure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal, Sequence, Union

Flavor = Literal["linear", "circular"]


@dataclass(frozen=True)
class SizeVector:
    """The car sizes (y_1, ..., y_n), all positive."""

    sizes: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "sizes", tuple(self.sizes))
        if len(self.sizes) < 1:
            raise ValueError("need at least one car")
        for y in self.sizes:
            if not isinstance(y, int) or y < 1:
                raise ValueError(f"car sizes must be positive integers, got {y!r}")

    @property
    def n(self) -> int:
        return len(self.sizes)

    @property
    def total(self) -> int:
        """Number of spots in the linear lot: T = sum of sizes."""
        return sum(self.sizes)

    @property
    def circle_size(self) -> int:
        """Number of spots on the circular lot: M = T + 1."""
        return self.total + 1


@dataclass(frozen=True)
class PrefSequence:
    """A tuple of preferred spots (1-based), linear or circular flavor."""

    prefs: tuple[int, ...]
    flavor: Flavor = "linear"

    def __post_init__(self) -> None:
        object.__setattr__(self, "prefs", tuple(self.prefs))
        if self.flavor not in ("linear", "circular"):
            raise ValueError(f"unknown flavor {self.flavor!r}")
        for c in self.prefs:
            if not isinstance(c, int) or c < 1:
                raise ValueError(f"preferences must be positive integers, got {c!r}")

    def __len__(self) -> int:
        return len(self.prefs)


@dataclass(frozen=True)
class Layout:
    """Final positions: car i (1-based) occupies spots starting at starts[i-1].

    A car of size y starting at s covers s, s+1, ..., s+y-1; on a circular
    lot the spots are taken mod M into [1, M].
    """

    sizes: SizeVector
    starts: tuple[int, ...]
    flavor: Flavor = "linear"

    def __post_init__(self) -> None:
        object.__setattr__(self, "starts", tuple(self.starts))
        if len(self.starts) != self.sizes.n:
            raise ValueError("one start per car required")

    def block(self, car: int) -> tuple[int, ...]:
        """The spots occupied by `car` (1-based index), in driving order."""
        y = self.sizes.sizes[car - 1]
        s = self.starts[car - 1]
        if self.flavor == "linear":
            return tuple(range(s, s + y))
        m = self.sizes.circle_size
        return tuple((s - 1 + k) % m + 1 for k in range(y))

    def occupied(self) -> set[int]:
        spots: set[int] = set()
        for car in range(1, self.sizes.n + 1):
            spots.update(self.block(car))
        return spots


@dataclass(frozen=True)
class Parked:
    layout: Layout


@dataclass(frozen=True)
class Collision:
    """Car `car` found first empty spot `first_empty` but spot `blocked`
    inside its needed block was already taken."""

    car: int
    first_empty: int
    blocked: int


@dataclass(frozen=True)
class PastEnd:
    """Car `car` drove past the end of the lot (linear lots only)."""

    car: int


ParkResult = Union[Parked, Collision, PastEnd]


def _check_prefs(sizes: SizeVector, prefs: PrefSequence, flavor: Flavor) -> None:
    if prefs.flavor != flavor:
        raise ValueError(f"expected {flavor} preferences, got {prefs.flavor}")
    if len(prefs) != sizes.n:
        raise ValueError(
            f"preference count {len(prefs)} does not match car count {sizes.n}"
        )
    limit = sizes.total if flavor == "linear" else sizes.circle_size
    for c in prefs.prefs:
        if not 1 <= c <= limit:
            raise ValueError(f"preference {c} outside [1, {limit}]")


def simulate_linear(sizes: SizeVector, prefs: PrefSequence) -> ParkResult:
    """Run the parking rule on the linear lot of T spots.

    Car i scans forward from its preference for the first empty spot j.
    It parks on [j, j + y_i - 1] when that block is free; a taken spot in
    [j+1, j+y_i-1] is a Collision, and running out of lot is PastEnd.
    """
    _check_prefs(sizes, prefs, "linear")
    t = sizes.total
    occupied = bytearray(t + 1)  # index 1..t
    starts: list[int] = []
    for i, (c, y) in enumerate(zip(prefs.prefs, sizes.sizes), start=1):
        j = c
        while j <= t and occupied[j]:
            j += 1
        if j > t or j + y - 1 > t:
            return PastEnd(car=i)
        for s in range(j + 1, j + y):
            if occupied[s]:
                return Collision(car=i, first_empty=j, blocked=s)
        for s in range(j, j + y):
            occupied[s] = 1
        starts.append(j)
    return Parked(Layout(sizes, tuple(starts), "linear"))


def is_parking_sequence(sizes: SizeVector, prefs: PrefSequence) -> bool:
    """True iff all cars park under the linear rule."""
    return isinstance(simulate_linear(sizes, prefs), Parked)


def is_classical_parking_function(prefs: Sequence[int] | Iterable[int]) -> bool:
    """Classical criterion: the increasing rearrangement b satisfies b_i <= i.

    The empty sequence counts as a parking function (vacuously).
    """
    values = list(prefs)
    for a in values:
        if not isinstance(a, int) or a < 1:
            raise ValueError(f"entries must be positive integers, got {a!r}")
    return all(b <= i for i, b in enumerate(sorted(values), start=1))
