import pytest

from parkseq import (
    BudgetExceededError,
    SizeVector,
    compositions,
    count_circular,
    count_linear,
    enumerate_parking_sequences,
    verify,
    verify_sweep,
)
from parkseq.bruteforce import bijection_checks
from conftest import naive_tally


CROSS_CHECK_CASES = [
    ((2, 2), "linear"),
    ((2, 2), "circular"),
    ((2, 2, 2), "linear"),
    ((1, 1, 1), "linear"),
    ((2, 2, 1), "circular"),
    ((3, 1, 2), "linear"),
    ((1, 3), "circular"),
    ((4,), "linear"),
]


@pytest.mark.parametrize("comp, flavor", CROSS_CHECK_CASES)
def test_tallies_match_literal_enumeration(comp, flavor):
    # the aggregated tally must agree, class by class, with one simulation
    # per tuple over the whole domain
    sizes = SizeVector(comp)
    report = verify(sizes, flavor)
    assert (report.parked, report.collisions, report.past_end) == \
        naive_tally(sizes, flavor)
    base = sizes.total if flavor == "linear" else sizes.circle_size
    assert report.total_tuples == base**sizes.n
    assert report.parked + report.collisions + report.past_end == \
        report.total_tuples


class TestVerify:
    def test_circular_two_by_two(self):
        report = verify(SizeVector((2, 2)), "circular")
        assert report.total_tuples == 25
        assert report.parked == 20
        assert report.collisions == 5
        assert report.past_end == 0
        assert report.match

    def test_linear_three_twos(self):
        report = verify(SizeVector((2, 2, 2)))
        assert report.parked == 30 == count_linear(SizeVector((2, 2, 2)))
        assert report.match

    def test_classical_three(self):
        report = verify(SizeVector((1, 1, 1)))
        assert report.parked == 16
        assert report.match

    def test_circular_never_past_end(self):
        for comp in [(1,), (2, 1), (2, 2, 1), (1, 1, 2)]:
            assert verify(SizeVector(comp), "circular").past_end == 0

    @pytest.mark.parametrize("comp", [(2, 2, 2), (3, 1, 2)])
    def test_partition_merge_determinism(self, comp):
        sizes = SizeVector(comp)
        reports = [verify(sizes, partitions=k) for k in (1, 2, 8)]
        assert reports[0] == reports[1] == reports[2]
        circ = [verify(sizes, "circular", partitions=k) for k in (1, 2, 8)]
        assert circ[0] == circ[1] == circ[2]

    def test_more_partitions_than_prefixes(self):
        sizes = SizeVector((1, 1))
        assert verify(sizes, partitions=10) == verify(sizes)

    def test_budget_refusal(self):
        with pytest.raises(BudgetExceededError) as exc_info:
            verify(SizeVector((5,) * 8), budget=10**8)
        assert exc_info.value.required == 40**8
        assert exc_info.value.sizes.sizes == (5,) * 8
        assert str(40**8) in str(exc_info.value)  # required budget reported

    def test_bad_partitions(self):
        with pytest.raises(ValueError):
            verify(SizeVector((2,)), partitions=0)


class TestEnumerate:
    def test_two_by_two_set_and_order(self):
        seqs = [p.prefs for p in enumerate_parking_sequences(SizeVector((2, 2)))]
        assert seqs == [(1, 1), (1, 2), (1, 3), (3, 1)]  # lexicographic

    def test_count_matches_formula(self):
        sizes = SizeVector((2, 2, 1))
        assert sum(1 for _ in enumerate_parking_sequences(sizes)) == 30

    def test_single_car(self):
        seqs = list(enumerate_parking_sequences(SizeVector((7,))))
        assert [p.prefs for p in seqs] == [(1,)]

    def test_budget_refusal(self):
        with pytest.raises(BudgetExceededError):
            next(enumerate_parking_sequences(SizeVector((2, 2)), budget=10))


class TestSweep:
    def test_small_linear_sweep_all_match(self):
        reports = verify_sweep(3, 6)
        assert reports
        assert all(r.match for r in reports)

    def test_single_car_sweep(self):
        reports = verify_sweep(1, 5)
        assert len(reports) == 5
        assert all(r.parked == 1 for r in reports)

    def test_circular_sweep_compositions(self):
        reports = verify_sweep(2, 4, "circular")
        comps = [r.sizes.sizes for r in reports]
        assert sorted(comps) == sorted(
            [(1,), (2,), (3,), (4,), (1, 1), (1, 2), (2, 1), (1, 3), (2, 2), (3, 1)]
        )
        assert all(r.match for r in reports)

    def test_budget_names_offender(self):
        with pytest.raises(BudgetExceededError) as exc_info:
            verify_sweep(3, 6, budget=100)
        assert exc_info.value.sizes.n >= 1


def test_compositions_generator():
    comps = list(compositions(2, 3))
    assert comps == [(1,), (2,), (3,), (1, 1), (1, 2), (2, 1)]


def test_bijection_checks_single_car():
    report = bijection_checks(SizeVector((3,)))
    assert report.option_sequences == 4
    assert report.distinct_decodes == 4
    assert report.all_pass


def test_bijection_checks_counts():
    report = bijection_checks(SizeVector((2, 2)))
    assert report.option_sequences == 20
    assert report.circular_parking_sequences == 20
    assert report.linear_parking_sequences == 4
    assert report.all_pass


def test_bijection_checks_budget():
    with pytest.raises(BudgetExceededError):
        bijection_checks(SizeVector((5, 5, 5)), budget=10)


def test_sweep_reports_match_circular_identity():
    for report in verify_sweep(3, 5, "circular"):
        assert report.formula_value == count_circular(report.sizes)
        assert report.formula_value == \
            report.sizes.circle_size * count_linear(report.sizes)
