import pytest

from conftest import uni
from plantedmaps import oracle
from plantedmaps.census import unicellular_stream
from plantedmaps.partition import (
    BoundExceeded,
    TrivialMap,
    WrongScenario,
    branches,
    classify,
    closed_branches,
    contraction_vertices_distinct,
    histogram,
    scenario,
    v1_profile,
)

B_MAP = uni(4, (1, 5), (2, 6), (3, 7), (4, 8))
II_MAP = uni(4, (1, 4), (2, 6), (3, 8), (5, 7))
F51_MAP = uni(5, (1, 6), (2, 4), (3, 5), (7, 9), (8, 10))
U1_MAP = uni(5, (1, 10), (2, 6), (3, 7), (4, 8), (5, 9))
G23_MAP = uni(5, (1, 2), (3, 7), (4, 8), (5, 9), (6, 10))


def test_v1_profile_examples():
    p = v1_profile(uni(2, (1, 3), (2, 4)))
    assert (p.degree, p.second, p.third) == (5, 3, 2)
    p = v1_profile(II_MAP)
    assert (p.second, p.second_pos, p.third, p.third_pos) == (4, 4, 7, 7)
    p = v1_profile(uni(1, (1, 2)))
    assert (p.degree, p.second, p.third) == (2, 2, None)


def test_v1_profile_rejects_trivial_map():
    with pytest.raises(TrivialMap):
        v1_profile(uni(0))


def test_classify_rejects_multi_face_maps():
    from conftest import mk
    from plantedmaps.core import ValidationError

    with pytest.raises(ValidationError):
        classify(mk((1, 1), (1, 2)))


def test_scenario_examples():
    assert scenario(B_MAP) == "B"
    assert scenario(II_MAP) == "A"
    assert scenario(uni(1, (1, 2))) == "A"


def test_branches_examples():
    br = branches(II_MAP)
    assert (br.first, br.second, br.third) == ((1, 2, 3, 4), (5, 6, 7), (8,))
    br = branches(uni(1, (1, 2)))
    assert (br.first, br.second, br.third) == ((1, 2), (), ())
    br = branches(F51_MAP)
    assert (br.first, br.second, br.third) == ((1, 2, 3, 4, 5, 6), (7, 8, 9), (10,))


def test_branches_rejects_scenario_b():
    with pytest.raises(WrongScenario):
        branches(B_MAP)


def test_classify_examples():
    assert classify(B_MAP).leaf == "B"
    assert classify(II_MAP).leaf == "II"
    assert classify(F51_MAP).leaf == "F51"
    assert classify(U1_MAP).leaf == "U1"
    pc = classify(G23_MAP)
    assert pc.leaf == "G23" and pc.first_pendant and not pc.second_pendant


def test_classify_is_total_and_leaves_are_disjoint():
    leaves = set()
    for n in range(1, 6):
        for m in unicellular_stream(n):
            pc = classify(m)
            leaves.add(pc.leaf)
            if pc.first_pendant:
                assert pc.leaf in ("U2", "G23")
            if pc.second_pendant:
                assert pc.leaf in ("U2", "G23", "G24")
    assert leaves <= {
        "U1",
        "U2",
        "G23",
        "G24",
        "F51",
        "F52",
        "F53",
        "F54",
        "II",
        "B",
    }


def test_closed_branch_count_is_never_two():
    for n in range(1, 6):
        for m in unicellular_stream(n):
            if scenario(m) == "A":
                assert sum(closed_branches(m)) in (0, 1, 3)


def test_contraction_edges_join_distinct_vertices():
    for n in range(1, 6):
        for m in unicellular_stream(n):
            assert contraction_vertices_distinct(m)


def test_histogram_0_2():
    h = histogram(0, 2)
    assert h.classes == {
        "U1": 0,
        "U2": 0,
        "G23": 0,
        "G24": 0,
        "F51": 0,
        "F52": 0,
        "F53": 0,
        "F54": 0,
        "II": 6,
        "B": 15,
    }
    assert h.total == 21


def test_histogram_0_3():
    h = histogram(0, 3)
    assert h.classes == {
        "U1": 21,
        "U2": 21,
        "G23": 21,
        "G24": 21,
        "F51": 1,
        "F52": 1,
        "F53": 1,
        "F54": 0,
        "II": 116,
        "B": 280,
    }
    assert h.total == 483
    assert (h.u2_first_pendant, h.u2_second_pendant, h.g23_second_pendant) == (0, 0, 0)


def test_histogram_1_4():
    h = histogram(1, 4)
    assert h.classes["B"] == 945
    assert h.classes["II"] == 540
    assert h.total == oracle.hz(3, 6) == 1485


def test_histogram_totals_match_recurrence():
    for n in range(4):
        for g in range((n + 2) // 2 - 1):
            assert histogram(g, n).total == oracle.hz(g + 2, n + 2)


def test_histogram_bound():
    with pytest.raises(BoundExceeded):
        histogram(0, 7)


def test_degenerate_double_pendant_is_u2_with_both_flags():
    # Both branches of this degree-3 map are pendant pairs; it sits below
    # genus 2 and never enters the identity's ranges.
    m = uni(2, (1, 2), (3, 4))
    pc = classify(m)
    assert pc.leaf == "U2" and pc.first_pendant and pc.second_pendant
    assert m.genus() == 0
