"""Measure-space clustering: standardization, k-means, Davies-Bouldin model
selection, and rule-based group naming."""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .errors import ConfigError, DegenerateClusteringError, UndefinedValueError


@dataclass(frozen=True)
class ClusteringResult:
    """A k-means clustering; db_index stays NaN until a validity pass fills it.

    inertia_trace holds the per-iteration inertia of the winning restart
    (non-increasing by construction of Lloyd iterations).
    """

    k: int
    assign: np.ndarray
    centroids: np.ndarray
    inertia: float
    db_index: float = float("nan")
    inertia_trace: tuple[float, ...] = ()


def standardize(mat) -> np.ndarray:
    """Center and scale every column to mean 0, population sd 1.

    Constant columns become all-zero.  Already standardized input is a fixed
    point up to rounding.
    """
    x = np.asarray(mat, dtype=np.float64)
    if x.ndim != 2 or x.shape[0] < 1:
        raise ConfigError("standardize needs a non-empty 2-D matrix")
    mu = x.mean(axis=0)
    sd = x.std(axis=0)
    out = np.zeros_like(x)
    ok = sd > 0
    out[:, ok] = (x[:, ok] - mu[ok]) / sd[ok]
    return out


def _init_centroids(x, k, rng):
    # Seeded sampling of k distinct rows, each new one weighted by squared
    # distance to the nearest already-chosen center.
    n = x.shape[0]
    chosen = np.empty(k, dtype=np.int64)
    chosen[0] = int(rng.integers(n))
    d2 = ((x - x[chosen[0]]) ** 2).sum(axis=1)
    for j in range(1, k):
        total = d2.sum()
        if total > 0:
            idx = int(rng.choice(n, p=d2 / total))
        else:
            remaining = np.setdiff1d(np.arange(n), chosen[:j])
            idx = int(remaining[0]) if remaining.size else int(rng.integers(n))
        chosen[j] = idx
        d2 = np.minimum(d2, ((x - x[idx]) ** 2).sum(axis=1))
    return x[chosen].copy()


def _assign_step(x, x_sq, c):
    d = x_sq[:, None] + (c * c).sum(axis=1)[None, :] - 2.0 * (x @ c.T)
    np.maximum(d, 0.0, out=d)
    assign = d.argmin(axis=1)  # ties resolve to the lowest group id
    return assign, d[np.arange(x.shape[0]), assign]


def _repair_empty(x, c, assign, point_d, counts):
    """Reseed every empty group from the point farthest from its centroid."""
    changed = False
    for empty in np.flatnonzero(counts == 0):
        far = int(point_d.argmax())
        counts[assign[far]] -= 1
        assign[far] = empty
        counts[empty] += 1
        c[empty] = x[far]
        point_d[far] = 0.0
        changed = True
    return changed


def _lloyd(x, k, rng, max_iter, tol):
    # x rows are in canonical (lexicographic) order, so every choice below is
    # invariant under permutations of the caller's input rows.
    n = x.shape[0]
    x_sq = (x * x).sum(axis=1)
    c = _init_centroids(x, k, rng)
    trace = []
    for _ in range(max_iter):
        assign, point_d = _assign_step(x, x_sq, c)
        counts = np.bincount(assign, minlength=k)
        _repair_empty(x, c, assign, point_d, counts)
        trace.append(float(point_d.sum()))
        # group sums in canonical row order: deterministic reduction
        idx = np.argsort(assign, kind="stable")
        bounds = np.searchsorted(assign[idx], np.arange(k))
        sums = np.add.reduceat(x[idx], bounds, axis=0)
        new_c = sums / counts[:, None]
        shift = np.sqrt(((new_c - c) ** 2).sum(axis=1)).max()
        c = new_c
        if shift < tol:
            break
    assign, point_d = _assign_step(x, x_sq, c)
    for _ in range(k):
        counts = np.bincount(assign, minlength=k)
        if not _repair_empty(x, c, assign, point_d, counts):
            break
        assign, point_d = _assign_step(x, x_sq, c)
    trace.append(float(point_d.sum()))
    return assign, c, float(point_d.sum()), tuple(trace)


def kmeans(mat, k, *, seed: int = 0, max_iter: int = 100, tol: float = 1e-6, restarts: int = 10) -> ClusteringResult:
    """Lloyd's algorithm with seeded restarts; the lowest-inertia run wins.

    Iterations stop once the largest centroid movement drops below tol or
    max_iter is reached; a final assignment pass makes the result a fixed
    point.  Empty groups are repaired by reseeding from the point farthest
    from its centroid.  The seed is applied to the data in canonical
    (lexicographically sorted) row order, so permuting input rows yields the
    same clustering up to the row permutation.
    """
    x = np.asarray(mat, dtype=np.float64)
    if x.ndim == 1:
        x = x[:, None]
    n = x.shape[0]
    if not 1 <= k <= n:
        raise ConfigError(f"k={k} must satisfy 1 <= k <= n={n}")
    if restarts < 1 or max_iter < 1 or tol <= 0:
        raise ConfigError("restarts and max_iter must be >= 1 and tol > 0")
    order = np.lexsort(x.T[::-1])
    xc = x[order]
    best = None
    for r in range(restarts):
        rng = np.random.default_rng([seed, r])
        assign_c, c, inertia, trace = _lloyd(xc, k, rng, max_iter, tol)
        if best is None or inertia < best[0]:
            best = (inertia, assign_c, c, trace)
    inertia, assign_c, c, trace = best
    assign = np.empty(n, dtype=np.int64)
    assign[order] = assign_c
    return ClusteringResult(k=k, assign=assign, centroids=c, inertia=inertia, inertia_trace=trace)


def davies_bouldin(mat, result: ClusteringResult) -> float:
    """Davies-Bouldin validity index; lower is better.

    Uses Euclidean scatter (mean distance of a group's points to its
    centroid) over Euclidean centroid separation.  Raises on fewer than two
    groups, and flags coincident centroids as a degenerate clustering.
    """
    x = np.asarray(mat, dtype=np.float64)
    if x.ndim == 1:
        x = x[:, None]
    k = result.k
    if k < 2:
        raise UndefinedValueError("the Davies-Bouldin index needs at least 2 groups")
    a = result.assign
    c = result.centroids
    counts = np.bincount(a, minlength=k)
    if (counts == 0).any():
        raise DegenerateClusteringError("clustering has an empty group")
    dist = np.sqrt(((x - c[a]) ** 2).sum(axis=1))
    scatter = np.bincount(a, weights=dist, minlength=k) / counts
    sep = np.sqrt(((c[:, None, :] - c[None, :, :]) ** 2).sum(axis=2))
    off = ~np.eye(k, dtype=bool)
    if (sep[off] == 0).any():
        raise DegenerateClusteringError("coincident centroids")
    ratio = (scatter[:, None] + scatter[None, :]) / np.where(off, sep, np.inf)
    return float(ratio.max(axis=1).mean())


def select_k(mat, k_min: int = 2, k_max: int = 15, *, seed: int = 0, max_iter: int = 100,
             tol: float = 1e-6, restarts: int = 10) -> ClusteringResult:
    """Best clustering over k in [k_min, k_max] by minimal Davies-Bouldin.

    Ties break toward smaller k; k values whose clustering is degenerate are
    skipped.  The returned result carries its db_index.
    """
    x = np.asarray(mat, dtype=np.float64)
    if x.ndim == 1:
        x = x[:, None]
    n = x.shape[0]
    if k_min < 2 or k_min > k_max:
        raise ConfigError(f"invalid k range [{k_min}, {k_max}]")
    if k_max > n:
        raise ConfigError(f"k_max={k_max} exceeds the number of points n={n}")
    best = None
    for k in range(k_min, k_max + 1):
        res = kmeans(x, k, seed=seed, max_iter=max_iter, tol=tol, restarts=restarts)
        try:
            db = davies_bouldin(x, res)
        except DegenerateClusteringError:
            continue
        if best is None or db < best.db_index:
            best = replace(res, db_index=db)
    if best is None:
        raise DegenerateClusteringError("every k in the range produced a degenerate clustering")
    return best


def renumber_by_size(result: ClusteringResult) -> ClusteringResult:
    """Relabel groups by descending size (ties by old id) for stable reports."""
    sizes = np.bincount(result.assign, minlength=result.k)
    order = np.lexsort((np.arange(result.k), -sizes))
    remap = np.empty(result.k, dtype=np.int64)
    remap[order] = np.arange(result.k)
    return replace(result, assign=remap[result.assign], centroids=result.centroids[order])


@dataclass(frozen=True)
class RoleThresholds:
    """Cut points, in standardized centroid space, for naming role groups.

    These are reporting heuristics over the objective clustering, not ground
    truth: pivot triggers on the internal intensities, connector on positive
    external intensity plus a diversity excess, orphan on every mean being
    large.
    """

    pivot: float = 1.0
    connector: float = 0.5
    orphan: float = 5.0


DEFAULT_ROLE_THRESHOLDS = RoleThresholds()


def label_role(centroid, thresholds: RoleThresholds | None = None) -> str:
    """Rule-based role name for a group centroid (8-vector, measure column order).

    The prefix is "pivot" when either internal intensity mean reaches the
    pivot threshold, else "non-pivot".  The category is: orphan when every
    mean is at least the orphan threshold; connector when both external
    intensity means are positive and some diversity mean reaches the
    connector threshold; ultra-peripheral when all eight means are negative;
    peripheral otherwise, suffixed by the dominant diversity direction when
    it is positive.
    """
    th = thresholds if thresholds is not None else DEFAULT_ROLE_THRESHOLDS
    c = np.asarray(centroid, dtype=np.float64).ravel()
    if c.shape[0] != 8:
        raise ValueError("a role centroid has 8 components")
    i_int = c[0:2]
    d = c[2:4]
    i_ext = c[4:6]
    prefix = "pivot" if i_int.max() >= th.pivot else "non-pivot"
    if c.min() >= th.orphan:
        return f"{prefix} orphelin"
    if i_ext.min() > 0 and d.max() >= th.connector:
        return f"{prefix} connecteur"
    if c.max() < 0:
        return f"{prefix} ultra-périphérique"
    d_out, d_in = float(d[0]), float(d[1])
    if max(d_out, d_in) > 0:
        suffix = " (sortant)" if d_out >= d_in else " (entrant)"
    else:
        suffix = ""
    return f"{prefix} périphérique{suffix}"
