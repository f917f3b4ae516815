import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from parkseq import (
    Collision,
    Parked,
    PastEnd,
    PrefSequence,
    SizeVector,
    is_classical_parking_function,
    is_parking_sequence,
    simulate_linear,
)


def layout_starts(result):
    assert isinstance(result, Parked)
    return result.layout.starts


class TestGoldenExamples:
    def test_three_cars_park(self):
        result = simulate_linear(SizeVector((2, 2, 1)), PrefSequence((2, 3, 1)))
        assert layout_starts(result) == (2, 4, 1)
        assert result.layout.block(1) == (2, 3)
        assert result.layout.block(2) == (4, 5)
        assert result.layout.block(3) == (1,)

    def test_collision(self):
        result = simulate_linear(SizeVector((2, 2, 2)), PrefSequence((3, 2, 1)))
        assert result == Collision(car=2, first_empty=2, blocked=3)

    def test_past_end(self):
        result = simulate_linear(SizeVector((2, 2, 2)), PrefSequence((2, 5, 5)))
        assert result == PastEnd(car=3)

    def test_order_sensitivity(self):
        sizes = SizeVector((2, 2))
        assert is_parking_sequence(sizes, PrefSequence((1, 2)))
        assert not is_parking_sequence(sizes, PrefSequence((2, 1)))
        # the rearranged failure is specifically a collision at spot 2
        assert simulate_linear(sizes, PrefSequence((2, 1))) == Collision(
            car=2, first_empty=1, blocked=2
        )

    @pytest.mark.parametrize("size", [1, 2, 5])
    def test_single_car_parks_at_one(self, size):
        result = simulate_linear(SizeVector((size,)), PrefSequence((1,)))
        assert layout_starts(result) == (1,)
        assert result.layout.block(1) == tuple(range(1, size + 1))


class TestInputContract:
    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            simulate_linear(SizeVector((2, 2)), PrefSequence((1,)))

    def test_pref_out_of_range(self):
        with pytest.raises(ValueError):
            simulate_linear(SizeVector((2, 2)), PrefSequence((5, 1)))

    def test_zero_size_rejected(self):
        with pytest.raises(ValueError):
            SizeVector((2, 0))

    def test_empty_sizes_rejected(self):
        with pytest.raises(ValueError):
            SizeVector(())

    def test_flavor_mismatch(self):
        with pytest.raises(ValueError):
            simulate_linear(SizeVector((2, 2)), PrefSequence((1, 2), "circular"))

    def test_derived_quantities(self):
        sv = SizeVector((2, 2, 1))
        assert (sv.n, sv.total, sv.circle_size) == (3, 5, 6)


class TestClassicalChecker:
    def test_examples(self):
        assert is_classical_parking_function((3, 1, 1))
        assert not is_classical_parking_function((2, 2, 2))
        assert is_classical_parking_function(())

    @given(st.integers(min_value=1, max_value=8))
    def test_identity_tuple(self, n):
        assert is_classical_parking_function(tuple(range(1, n + 1)))

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            is_classical_parking_function((0, 1))


# strategy: a size vector and a valid linear preference tuple for it
@st.composite
def sizes_and_prefs(draw):
    sizes = SizeVector(
        tuple(draw(st.lists(st.integers(1, 4), min_size=1, max_size=5)))
    )
    prefs = tuple(
        draw(st.integers(1, sizes.total)) for _ in range(sizes.n)
    )
    return sizes, PrefSequence(prefs)


@given(sizes_and_prefs())
def test_simulation_is_deterministic(case):
    sizes, prefs = case
    assert simulate_linear(sizes, prefs) == simulate_linear(sizes, prefs)


@given(sizes_and_prefs())
def test_parked_layout_covers_lot_exactly(case):
    sizes, prefs = case
    result = simulate_linear(sizes, prefs)
    if isinstance(result, Parked):
        occupied = []
        for car in range(1, sizes.n + 1):
            occupied.extend(result.layout.block(car))
        assert sorted(occupied) == list(range(1, sizes.total + 1))


@given(sizes_and_prefs())
def test_monotone_scan_replay(case):
    # no car may have skipped a spot that was empty when it arrived
    sizes, prefs = case
    result = simulate_linear(sizes, prefs)
    if not isinstance(result, Parked):
        return
    occupied = set()
    for car in range(1, sizes.n + 1):
        start = result.layout.starts[car - 1]
        for spot in range(prefs.prefs[car - 1], start):
            assert spot in occupied
        occupied.update(result.layout.block(car))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_classical_equivalence_exhaustive(n):
    sizes = SizeVector((1,) * n)
    for tup in itertools.product(range(1, n + 1), repeat=n):
        assert is_parking_sequence(sizes, PrefSequence(tup)) == \
            is_classical_parking_function(tup)
