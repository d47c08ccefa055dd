import numpy as np
import pytest

from roleforge.capitalists import (CapitalistRecord, classify_ratio, classify_record, crosstab,
                                   detect_capitalists, overlap_index, ratio)
from roleforge.clustering import ClusteringResult
from roleforge.errors import UndefinedValueError
from roleforge.synth import planted_capitalist_graph

from conftest import graph_from_edges, random_edges
from oracles import oracle_overlap, oracle_ratio


def star_graph(followers, followees, n):
    """Node 0 with the given follower and followee id sets."""
    edges = [(v, 0) for v in followers] + [(0, v) for v in followees]
    return graph_from_edges(edges, n)


def test_overlap_identical_sets():
    g = star_graph({1, 2, 3}, {1, 2, 3}, 4)
    assert overlap_index(g, 0) == 1.0


def test_overlap_disjoint_sets():
    g = star_graph({1, 2}, {3, 4}, 5)
    assert overlap_index(g, 0) == 0.0


def test_overlap_partial():
    g = star_graph({1, 2, 3, 4}, {2, 3, 4, 5, 6}, 7)
    assert overlap_index(g, 0) == 0.75


def test_overlap_zero_when_either_side_empty():
    g = graph_from_edges([(1, 0)], 2)
    assert overlap_index(g, 0) == 0.0
    assert overlap_index(g, 1) == 0.0


def test_overlap_matches_oracle_and_transpose_invariance():
    rng = np.random.default_rng(3)
    for trial in range(10):
        n = int(rng.integers(4, 40))
        edges = random_edges(rng, n, 4 * n)
        g = graph_from_edges(edges, n)
        t = g.transpose()
        for u in range(n):
            ov = overlap_index(g, u)
            assert ov == pytest.approx(oracle_overlap(edges, n, u), abs=1e-12)
            assert overlap_index(t, u) == ov


def test_ratio():
    g = star_graph({1, 2, 3}, {4, 5, 6}, 7)
    assert ratio(g, 0) == 1.0
    g2 = star_graph(set(range(1, 11)), {11, 12, 13, 14, 15, 16, 17}, 18)
    assert ratio(g2, 0) == 0.7
    g3 = star_graph({1, 2, 3, 4, 5}, set(), 6)
    assert ratio(g3, 0) == 0.0
    with pytest.raises(UndefinedValueError):
        ratio(g3, 1)
    for u in range(18):
        want = oracle_ratio([(v, 0) for v in range(1, 11)] + [(0, v) for v in range(11, 18)], 18, u)
        if want is None:
            continue
        assert ratio(g2, u) == want


BOUNDARY_CASES = [
    (500, 0.69, ("low", "FMIFY")),
    (500, 0.7, ("low", "FMIFY")),
    (500, 1.0, ("low", "IFYFM")),
    (10000, 0.69, ("low", "FMIFY")),
    (10000, 0.7, ("low", "FMIFY")),
    (10000, 1.0, ("low", "IFYFM")),
    (10001, 0.69, ("high", "passive")),
    (10001, 0.7, ("high", "FMIFY")),
    (10001, 1.0, ("high", "IFYFM")),
]


@pytest.mark.parametrize("k_in,r,expected", BOUNDARY_CASES)
def test_classify_ratio_boundaries(k_in, r, expected):
    assert classify_ratio(k_in, r) == expected


def test_classify_record():
    assert classify_record(5000, 6500, 0.9) == ("low", "IFYFM")
    assert classify_record(20000, 10000, 0.9) == ("high", "passive")
    assert classify_record(20000, 17000, 0.9) == ("high", "FMIFY")
    with pytest.raises(ValueError):
        classify_record(499, 499, 0.9)
    with pytest.raises(ValueError):
        classify_record(5000, 5000, 1.5)


def test_detection_floor_and_threshold(tmp_path):
    # planted node 0: 600 reciprocal partners -> overlap 1, detected
    partners = list(range(1, 601))
    edges = [(0, v) for v in partners] + [(v, 0) for v in partners]
    g = graph_from_edges(edges, 601)
    records = detect_capitalists(g)
    assert [r.node for r in records] == [0]
    assert records[0].overlap == 1.0
    assert records[0].band == "low"
    # in-degree 499 with perfect overlap stays below the floor
    partners = list(range(1, 500))
    edges = [(0, v) for v in partners] + [(v, 0) for v in partners]
    g2 = graph_from_edges(edges, 500)
    assert detect_capitalists(g2) == []


def test_detection_monotone_in_thresholds():
    g, planted = planted_capitalist_graph(n=1500, n_capitalists=12, partner_count=520,
                                          background_out=10, seed=5)
    base = {r.node for r in detect_capitalists(g, overlap_min=0.5, in_degree_min=500)}
    tighter = {r.node for r in detect_capitalists(g, overlap_min=0.9, in_degree_min=500)}
    taller = {r.node for r in detect_capitalists(g, overlap_min=0.5, in_degree_min=520)}
    assert tighter <= base
    assert taller <= base


def test_detection_planted_small():
    g, planted = planted_capitalist_graph(n=2000, n_capitalists=15, partner_count=550, seed=9)
    records = detect_capitalists(g, overlap_min=0.8, in_degree_min=500)
    assert {r.node for r in records} == set(planted.tolist())
    k_ins = [r.k_in for r in records]
    assert k_ins == sorted(k_ins, reverse=True)


def test_crosstab_concentration():
    res = ClusteringResult(k=2, assign=np.array([0] * 70 + [1] * 30), centroids=np.zeros((2, 8)),
                           inertia=0.0)
    recs = [CapitalistRecord(i, 600, 500, 1.0, 500 / 600, "low", "FMIFY") for i in range(10)]
    tables = crosstab(recs, res, 100)
    row_a, row_b = tables[("low", "FMIFY")]
    assert row_a.tolist() == [100.0, 0.0]
    # 7/3 split over groups of size 70/30
    recs = [CapitalistRecord(i, 600, 500, 1.0, 500 / 600, "low", "FMIFY") for i in range(7)]
    recs += [CapitalistRecord(70 + i, 600, 500, 1.0, 500 / 600, "low", "FMIFY") for i in range(3)]
    row_a, row_b = crosstab(recs, res, 100)[("low", "FMIFY")]
    assert row_a.tolist() == pytest.approx([70.0, 30.0], abs=1e-12)
    assert row_b.tolist() == pytest.approx([10.0, 10.0], abs=1e-12)


def test_crosstab_rows_sum_to_100_and_empty_slices_are_zero():
    rng = np.random.default_rng(31)
    res = ClusteringResult(k=4, assign=rng.integers(0, 4, size=200), centroids=np.zeros((4, 8)),
                           inertia=0.0)
    recs = []
    for i in range(40):
        k_in = int(rng.integers(500, 30000))
        r = float(rng.uniform(0.2, 2.0))
        band, behavior = classify_ratio(k_in, r)
        recs.append(CapitalistRecord(int(rng.integers(0, 200)), k_in, int(r * k_in), 0.9, r,
                                     band, behavior))
    tables = crosstab(recs, res, 200)
    for (band, behavior), (row_a, row_b) in tables.items():
        present = any(rec.band == band and rec.behavior == behavior for rec in recs)
        if present:
            assert abs(row_a.sum() - 100.0) < 0.01
        else:
            assert row_a.tolist() == [0.0] * 4
            assert row_b.tolist() == [0.0] * 4
