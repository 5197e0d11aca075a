import pytest

from conftest import mk, uni
from plantedmaps import bijections as bij
from plantedmaps import roundtrips
from plantedmaps.census import tricellular_stream
from plantedmaps.core import Disconnected, ValidationError
from plantedmaps.partition import classify

EPS = uni(0)
M2 = uni(2, (1, 3), (2, 4))
M4 = uni(4, (1, 5), (2, 6), (3, 7), (4, 8))
II_MAP = uni(4, (1, 4), (2, 6), (3, 8), (5, 7))
TRI_211 = mk((2, 1, 1), (1, 3), (2, 4))


def test_cut_worked_example():
    res = bij.cut(II_MAP)
    assert res.map == TRI_211
    assert res.became_plants == (4, 7, 9)
    assert II_MAP.genus() == 2 and res.map.genus() == 0


def test_cut_errors():
    with pytest.raises(bij.WrongScenario):
        bij.cut(M4)  # class B
    with pytest.raises(bij.DegenerateM2):
        bij.cut(uni(1, (1, 2)))  # degree-2 root vertex


def test_glue_inverts_cut_example():
    assert bij.glue(TRI_211) == II_MAP


def test_glue_rejects_three_plant_only_faces():
    with pytest.raises(ValidationError):
        bij.glue(mk((0, 0, 0)))


def test_contract_examples():
    out, marks = bij.contract(uni(5, (1, 10), (2, 6), (3, 7), (4, 8), (5, 9)), (1, 10))
    assert out == M4 and marks == (0, 8)
    out, marks = bij.contract(uni(5, (1, 2), (3, 7), (4, 8), (5, 9), (6, 10)), (1, 2))
    assert out == M4 and marks == (0, 0)


def test_contract_errors():
    with pytest.raises(bij.SameVertex):
        bij.contract(M2, (1, 3))
    with pytest.raises(bij.EdgeIsPlant):
        bij.contract(M2, (0, 5))
    with pytest.raises(ValidationError):
        bij.contract(M2, (1, 2))  # not an edge
    crossing = mk((1, 1), (1, 2))  # pair spans the two faces: ids 1 and 4
    with pytest.raises(bij.TwoSided):
        bij.contract(crossing, (1, 4))


def test_insert_edge_examples():
    assert bij.insert_edge(M4, 0, 8) == uni(5, (1, 10), (2, 6), (3, 7), (4, 8), (5, 9))
    assert bij.insert_edge(EPS, 0, 0) == uni(1, (1, 2))


def test_insert_edge_errors():
    with pytest.raises(bij.MarkOrder):
        bij.insert_edge(M4, 3, 1)
    with pytest.raises(bij.MarkIsPlant):
        bij.insert_edge(M4, 0, 9)
    # marks in different vertices would change the genus
    with pytest.raises(ValidationError):
        bij.insert_edge(uni(1, (1, 2)), 0, 1)


def test_contract_insert_roundtrip_all_pairs_small():
    from plantedmaps.census import unicellular_stream

    for n in range(4):
        for u in unicellular_stream(n):
            vo = u.vertex_of
            last = 2 * n
            for x in range(0, last + 1):
                for y in range(x, last + 1):
                    if vo[x] != vo[y]:
                        continue
                    v = bij.insert_edge(u, x, y)
                    assert v.genus() == u.genus()
                    back, marks = bij.contract(v, bij.inserted_edge_ids(x, y))
                    assert back == u and marks == (x, y)


def test_delete_pair_examples():
    out, marks = bij.delete_pair(M4)
    assert out == M2 and marks == (2, 2)
    out, marks = bij.delete_pair(M2)
    assert out == EPS and marks == (0, 0)


def test_delete_pair_rejects_other_classes():
    with pytest.raises(bij.NotClassB):
        bij.delete_pair(II_MAP)


def test_insert_pair_examples():
    assert bij.insert_pair(M2, 2, 2) == M4
    assert bij.insert_pair(EPS, 0, 0) == M2


def test_insert_pair_lands_in_class_b_for_every_mark_pair():
    for a in range(5):
        for b in range(a, 5):
            out = bij.insert_pair(M2, a, b)
            assert classify(out).leaf == "B"
            assert out.genus() == 2


def test_psi_image_count_at_0_2():
    rep = roundtrips.roundtrip("psi", 0, 2)
    assert rep["ok"]
    assert rep["domain_size"] == 15 == rep["image_size"]


def test_eta_examples():
    assert bij.eta(1, uni(5, (1, 10), (2, 6), (3, 7), (4, 8), (5, 9))) == M4
    assert bij.eta(3, uni(5, (1, 2), (3, 7), (4, 8), (5, 9), (6, 10))) == M4


def test_eta_wrong_class():
    with pytest.raises(bij.WrongClass):
        bij.eta(1, M4)  # class B
    with pytest.raises(bij.WrongClass):
        bij.eta(5, II_MAP)


def test_eta1_inverse_covers_u1_at_0_3():
    from plantedmaps.roundtrips import maps_by_class, uni_maps

    u1_maps = set(maps_by_class(0, 3)["U1"])
    rebuilt = {bij.eta_inv(1, u) for u in uni_maps(2, 4)}
    assert rebuilt == u1_maps
    rebuilt2 = {bij.eta_inv(2, u) for u in uni_maps(2, 4)}
    assert rebuilt2 == set(maps_by_class(0, 3)["U2"])
    for u in uni_maps(2, 4):
        assert bij.eta(1, bij.eta_inv(1, u)) == u


def test_theta_worked_example():
    t = bij.theta(II_MAP)
    assert t == TRI_211
    assert bij.theta_inv(t) == II_MAP


def test_theta_image_at_0_2():
    rep = roundtrips.roundtrip("theta", 0, 2)
    assert rep["ok"] and rep["domain_size"] == 6


def test_theta_inv_classifies_as_ii():
    for t in tricellular_stream(2):
        assert classify(bij.theta_inv(t)).leaf == "II"


def test_theta_inv_rejects_disconnected():
    with pytest.raises(Disconnected):
        bij.theta_inv(mk((2, 1, 1), (1, 2), (3, 4)))


def test_split5_worked_example():
    f51 = uni(5, (1, 6), (2, 4), (3, 5), (7, 9), (8, 10))
    unip, bip = bij.split5(1, f51)
    assert unip == M2 and unip.genus() == 1
    assert bip == mk((1, 1), (1, 2)) and bip.genus() == 0
    assert bij.join5(1, (unip, bip)) == f51


def test_split5_wrong_class():
    with pytest.raises(bij.WrongClass):
        bij.split5(2, uni(5, (1, 6), (2, 4), (3, 5), (7, 9), (8, 10)))


def test_join5_rejects_trivial_pieces():
    bi = mk((1, 1), (1, 2))
    with pytest.raises(bij.WrongClass):
        bij.join5(1, (EPS, bi))
    with pytest.raises(bij.WrongClass):
        bij.join5(4, (EPS, EPS, EPS))


def test_split5_counts_at_0_3():
    rep = roundtrips.roundtrip("split5", 0, 3)
    assert rep["ok"]
    assert rep["domain_size"] == 3  # one map in each of F51, F52, F53


def test_cut_roundtrip_at_0_2():
    rep = roundtrips.roundtrip("cut", 0, 2)
    assert rep["ok"] and rep["domain_size"] == 6


def test_bookkeeping_assertions():
    # cut keeps the pairing, only the face partition changes
    res = bij.cut(II_MAP)
    assert res.map.np_edge_count == II_MAP.np_edge_count - 2
    # contraction preserves genus and removes one edge
    out, _ = bij.contract(uni(5, (1, 10), (2, 6), (3, 7), (4, 8), (5, 9)), (1, 10))
    assert out.np_edge_count == 4
    # pair deletion lowers genus by one and removes two edges
    out, _ = bij.delete_pair(M4)
    assert out.genus() == M4.genus() - 1
    assert out.np_edge_count == M4.np_edge_count - 2
