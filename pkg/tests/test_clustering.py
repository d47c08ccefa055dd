import itertools

import numpy as np
import pytest

from roleforge.clustering import (ClusteringResult, RoleThresholds, davies_bouldin, kmeans,
                                  label_role, renumber_by_size, select_k, standardize)
from roleforge.errors import ConfigError, DegenerateClusteringError, UndefinedValueError

from oracles import oracle_davies_bouldin


def blobs(k, n_per, seed, sigma=0.1, sep=6.0, dim=8):
    rng = np.random.default_rng(seed)
    centers = sep * np.eye(dim)[:k]
    pts = [centers[i] + sigma * rng.standard_normal((n_per, dim)) for i in range(k)]
    return np.vstack(pts)


def best_two_partition_inertia(points):
    """Exhaustive check over all assignments of points to 2 groups."""
    pts = np.asarray(points, dtype=float)
    best = np.inf
    for labels in itertools.product([0, 1], repeat=len(pts)):
        labels = np.array(labels)
        if labels.min() == labels.max():
            continue
        inertia = 0.0
        for c in (0, 1):
            grp = pts[labels == c]
            inertia += ((grp - grp.mean(axis=0)) ** 2).sum()
        best = min(best, inertia)
    return best


def test_standardize_basic():
    out = standardize(np.array([[1.0], [3.0]]))
    assert out.ravel().tolist() == [-1.0, 1.0]


def test_standardize_constant_column():
    out = standardize(np.array([[2.0, 1.0], [2.0, 3.0]]))
    assert out[:, 0].tolist() == [0.0, 0.0]
    assert out[:, 1].tolist() == [-1.0, 1.0]


def test_standardize_idempotent():
    rng = np.random.default_rng(1)
    x = rng.standard_normal((50, 4))
    once = standardize(x)
    twice = standardize(once)
    assert np.abs(twice - once).max() <= 1e-12
    assert once.mean(axis=0) == pytest.approx(np.zeros(4), abs=1e-12)
    assert once.std(axis=0) == pytest.approx(np.ones(4), abs=1e-12)


def test_kmeans_two_clusters_1d():
    pts = np.array([[0.0], [1.0], [9.0], [10.0]])
    res = kmeans(pts, 2, seed=0)
    assert sorted(res.centroids.ravel().tolist()) == [0.5, 9.5]
    assert res.inertia == pytest.approx(1.0, abs=1e-12)
    assert res.inertia == pytest.approx(best_two_partition_inertia(pts), abs=1e-12)


def test_kmeans_degenerate_k():
    pts = np.array([[0.0], [2.0], [4.0]])
    res1 = kmeans(pts, 1, seed=0)
    assert res1.centroids.ravel().tolist() == [2.0]
    assert res1.inertia == pytest.approx(pts.var() * 3, abs=1e-12)
    resn = kmeans(pts, 3, seed=0)
    assert resn.inertia == 0.0
    assert sorted(resn.centroids.ravel().tolist()) == [0.0, 2.0, 4.0]


def test_kmeans_k_exceeds_n():
    with pytest.raises(ConfigError):
        kmeans(np.zeros((3, 2)), 4)


def test_kmeans_fixed_point_and_nonempty():
    rng = np.random.default_rng(7)
    x = rng.standard_normal((120, 5))
    res = kmeans(x, 6, seed=3)
    counts = np.bincount(res.assign, minlength=6)
    assert (counts > 0).all()
    d = ((x[:, None, :] - res.centroids[None]) ** 2).sum(axis=2)
    assert np.array_equal(d.argmin(axis=1), res.assign)


def test_kmeans_inertia_trace_non_increasing():
    rng = np.random.default_rng(11)
    x = rng.standard_normal((200, 3))
    res = kmeans(x, 4, seed=0, restarts=3)
    trace = res.inertia_trace
    assert len(trace) >= 2
    for a, b in zip(trace, trace[1:]):
        assert b <= a + 1e-9 * max(1.0, a)


def test_kmeans_row_permutation_invariance():
    rng = np.random.default_rng(13)
    x = blobs(3, 40, seed=5)
    res = kmeans(x, 3, seed=2)
    perm = rng.permutation(len(x))
    res_p = kmeans(x[perm], 3, seed=2)
    # same centroids (as a set) and the same grouping of the permuted rows
    c1 = sorted(map(tuple, np.round(res.centroids, 9)))
    c2 = sorted(map(tuple, np.round(res_p.centroids, 9)))
    assert c1 == c2
    relabel = {}
    for i, j in zip(res_p.assign, res.assign[perm]):
        relabel.setdefault(int(i), int(j))
        assert relabel[int(i)] == int(j)


def test_kmeans_restarts_never_hurt():
    rng = np.random.default_rng(17)
    x = rng.standard_normal((80, 4))
    single = kmeans(x, 5, seed=9, restarts=1)
    multi = kmeans(x, 5, seed=9, restarts=8)
    assert multi.inertia <= single.inertia + 1e-12


def test_davies_bouldin_zero_scatter():
    pts = np.array([[0.0], [0.0], [2.0], [2.0]])
    res = kmeans(pts, 2, seed=0)
    assert davies_bouldin(pts, res) == 0.0


def test_davies_bouldin_hand_value():
    pts = np.array([[0.0], [1.0], [9.0], [10.0]])
    res = kmeans(pts, 2, seed=0)
    db = davies_bouldin(pts, res)
    assert db == pytest.approx(1.0 / 9.0, abs=1e-12)
    assert db == pytest.approx(
        oracle_davies_bouldin(pts.tolist(), res.assign.tolist(), res.centroids.tolist()), abs=1e-12
    )


def test_davies_bouldin_duplication_invariant():
    pts = blobs(3, 30, seed=21)
    res = kmeans(pts, 3, seed=1)
    db = davies_bouldin(pts, res)
    doubled = np.vstack([pts, pts])
    res2 = ClusteringResult(k=3, assign=np.concatenate([res.assign, res.assign]),
                            centroids=res.centroids, inertia=2 * res.inertia)
    assert davies_bouldin(doubled, res2) == pytest.approx(db, abs=1e-12)


def test_davies_bouldin_errors():
    pts = np.array([[0.0], [1.0]])
    res = kmeans(pts, 1, seed=0)
    with pytest.raises(UndefinedValueError):
        davies_bouldin(pts, res)
    bad = ClusteringResult(k=2, assign=np.array([0, 1]), centroids=np.array([[0.5], [0.5]]),
                           inertia=0.0)
    with pytest.raises(DegenerateClusteringError):
        davies_bouldin(pts, bad)


def test_select_k_recovers_blob_count():
    for k_true in (2, 6):
        x = blobs(k_true, 100, seed=100 + k_true)
        res = select_k(x, 2, min(15, len(x)), seed=0, restarts=4)
        assert res.k == k_true
        assert res.db_index >= 0.0


def test_select_k_validates_range():
    x = np.zeros((10, 2))
    with pytest.raises(ConfigError):
        select_k(x, 5, 3)
    with pytest.raises(ConfigError):
        select_k(x, 2, 11)
    with pytest.raises(ConfigError):
        select_k(x, 1, 4)


def test_renumber_by_size():
    res = ClusteringResult(k=3, assign=np.array([2, 2, 2, 0, 0, 1]),
                           centroids=np.array([[10.0], [20.0], [30.0]]), inertia=0.0)
    out = renumber_by_size(res)
    assert out.assign.tolist() == [0, 0, 0, 1, 1, 2]
    assert out.centroids.ravel().tolist() == [30.0, 10.0, 20.0]


# group mean vectors in measure-column order, with their expected names
LABEL_CASES = [
    ((-0.12, -0.03, -0.55, -0.80, -0.09, -0.04, -0.12, -0.06), "non-pivot ultra-périphérique"),
    ((94.22, 311.27, 7.18, 88.40, 113.87, 283.79, 112.79, 285.57), "pivot orphelin"),
    ((5.52, 1.40, 5.60, 3.10, 5.28, 1.43, 6.76, 2.34), "pivot connecteur"),
    ((-0.04, 0.00, -0.37, 0.69, -0.07, 0.00, -0.10, -0.01), "non-pivot périphérique (entrant)"),
    ((-0.03, -0.01, 0.60, 0.19, -0.03, -0.02, -0.04, -0.02), "non-pivot périphérique (sortant)"),
    ((0.48, 0.12, 1.96, 1.70, 0.35, 0.12, 0.53, 0.19), "non-pivot connecteur"),
]


@pytest.mark.parametrize("centroid,expected", LABEL_CASES)
def test_label_role(centroid, expected):
    assert label_role(centroid) == expected


def test_label_role_thresholds_are_config():
    c = (0.2, 0.2, 0.6, 0.2, 0.1, 0.1, 0.1, 0.1)
    assert label_role(c) == "non-pivot connecteur"
    assert label_role(c, RoleThresholds(pivot=0.1)) == "pivot connecteur"
    assert label_role(c, RoleThresholds(connector=0.7)).startswith("non-pivot périphérique")
