import pytest
from hypothesis import given, settings
from hypothesis.strategies import integers

from critcolor.core.errors import NotMinimal, PreconditionViolated
from critcolor.harness.verification import lemma1_scan
from critcolor.mozhan.lemma import COMPLETE, ODD_CYCLE, verify_lemma1
from critcolor.mozhan.partition import PartitionedColoring, PartitionScheme, SearchMode
from critcolor.mozhan.search import find_minimal_partitioned_coloring


def test_k6(k6):
    pi = find_minimal_partitioned_coloring(k6, PartitionScheme((2, 3)), 0)
    report = verify_lemma1(k6, pi, 0)
    assert report.passed and report.certified
    group2 = report.groups[1]
    assert group2.applies and group2.shape == COMPLETE and group2.passed
    assert len(group2.z_vertices) == 4


def test_c5(c5):
    pi = find_minimal_partitioned_coloring(c5, PartitionScheme((2,)), 0)
    report = verify_lemma1(c5, pi)
    (group,) = report.groups
    assert group.z_vertices == [0, 1, 2, 3, 4]
    assert group.shape == ODD_CYCLE
    assert group.passed


def test_figure1_all_low_vertices(figure1):
    for x in (0, 1, 2, 4, 5, 6, 7):
        pi = find_minimal_partitioned_coloring(figure1, PartitionScheme((2, 2)), x)
        assert verify_lemma1(figure1, pi).passed


def test_uncertified_coloring_needs_advisory(c5):
    pi = find_minimal_partitioned_coloring(c5, PartitionScheme((2,)), 0, SearchMode.LOCAL_SEARCH)
    with pytest.raises(NotMinimal):
        verify_lemma1(c5, pi)
    report = verify_lemma1(c5, pi, advisory=True)
    assert not report.certified


def test_wrong_singleton(c5):
    pi = PartitionedColoring.from_assignment(PartitionScheme((2,)), [0, 1, 2, 1, 2], SearchMode.EXACT)
    with pytest.raises(PreconditionViolated):
        verify_lemma1(c5, pi, 3)


def test_scan_is_clean_and_deterministic():
    first = lemma1_scan(samples=40, max_n=7, seed=3, budget_ms=0)
    second = lemma1_scan(samples=40, max_n=7, seed=3, budget_ms=0)
    assert first.to_json() == second.to_json()
    assert first.scanned == 40
    assert first.violations["lemma1"] == 0
    assert not first.error_records


@pytest.mark.slow
def test_scan_at_full_scale():
    report = lemma1_scan(samples=500, max_n=8, seed=0, budget_ms=0)
    assert report.violations["lemma1"] == 0
    assert report.counts.get("passed", 0) + report.counts.get("not_applicable", 0) == 500


@settings(max_examples=25, deadline=None)
@given(integers(min_value=0, max_value=10_000))
def test_scan_samples_never_violate(seed):
    report = lemma1_scan(samples=3, max_n=7, seed=seed, budget_ms=0)
    assert report.violations["lemma1"] == 0


def test_scan_records_carry_the_colouring():
    report = lemma1_scan(samples=20, max_n=6, seed=5, budget_ms=0)
    passed = [r for r in report.records if r.status.value == "passed"]
    assert passed
    for record in passed:
        coloring = record.detail["coloring"]
        assert coloring["provenance"] == "exact"
        assert coloring["singleton"] == record.detail["singleton"]
        assert coloring["scheme"]["group_sizes"] == record.detail["group_sizes"]
        assert coloring["coloring"]["assignment"][coloring["singleton"]] == 0
        assert coloring["coloring"]["k"] == sum(coloring["scheme"]["group_sizes"]) + 1
