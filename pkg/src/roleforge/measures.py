"""Community-role measures over a directed graph and a partition.

Four per-node quantities are computed separately for out-links (followees)
and in-links (followers), then expressed as z-scores relative to the node's
own community:

  internal intensity  I_int = Z(k_int)    links kept inside the community
  diversity           D     = Z(eps)      distinct external communities reached
  external intensity  I_ext = Z(k_ext)    links leaving the community
  heterogeneity       H     = Z(lambda)   spread of the per-external-community
                                          link counts

All standard deviations are population ones: the community is the whole
population of interest.  Constant (or singleton) communities z-score to 0.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, UndefinedValueError
from .graph import DirectedGraph

MEASURE_COLUMNS = ("I_int_out", "I_int_in", "D_out", "D_in", "I_ext_out", "I_ext_in", "H_out", "H_in")


@dataclass(frozen=True)
class NodeCommunityProfile:
    """Raw per-node connectivity counts relative to a partition (length-n arrays)."""

    k_int_out: np.ndarray
    k_ext_out: np.ndarray
    eps_out: np.ndarray
    lambda_out: np.ndarray
    k_int_in: np.ndarray
    k_ext_in: np.ndarray
    eps_in: np.ndarray
    lambda_in: np.ndarray


def z_score_within_community(values, partition) -> np.ndarray:
    """Z-score of `values` relative to each node's community.

    Uses the population standard deviation over the community members; when
    it is zero (constant values, singleton community) every member gets 0.
    """
    v = np.asarray(values, dtype=np.float64)
    a = partition.assign
    if v.shape[0] != a.shape[0]:
        raise ValueError("values must have one entry per node")
    nc = partition.n_comms
    sizes = np.bincount(a, minlength=nc)
    safe = np.maximum(sizes, 1)
    mean = np.bincount(a, weights=v, minlength=nc) / safe
    var = np.bincount(a, weights=v * v, minlength=nc) / safe - mean**2
    sigma = np.sqrt(np.maximum(var, 0.0))
    z = np.zeros_like(v)
    ok = sigma[a] > 0
    z[ok] = (v[ok] - mean[a][ok]) / sigma[a][ok]
    return z


def _direction_profile(src, nbr, assign, n, n_comms, include_zeros):
    deg = np.bincount(src, minlength=n)
    internal = assign[nbr] == assign[src]
    k_int = np.bincount(src[internal], minlength=n)
    k_ext = deg - k_int
    ext_src = src[~internal]
    ext_comm = assign[nbr][~internal]
    key = ext_src * np.int64(n_comms) + ext_comm
    uniq, counts = np.unique(key, return_counts=True)
    unode = uniq // n_comms
    eps = np.bincount(unode, minlength=n)
    counts = counts.astype(np.float64)
    csum = np.bincount(unode, weights=counts, minlength=n)
    csum2 = np.bincount(unode, weights=counts * counts, minlength=n)
    if include_zeros:
        denom = np.full(n, float(max(n_comms - 1, 0)))
    else:
        denom = eps.astype(np.float64)
    ok = denom > 0
    mean = np.zeros(n)
    mean[ok] = csum[ok] / denom[ok]
    var = np.zeros(n)
    var[ok] = csum2[ok] / denom[ok] - mean[ok] ** 2
    lam = np.sqrt(np.maximum(var, 0.0))
    return k_int, k_ext, eps, lam


def community_profile(g: DirectedGraph, partition, *, lambda_include_zeros: bool = False) -> NodeCommunityProfile:
    """Internal/external degree split, community reach, and spread per node.

    For each node and arc direction: k_int and k_ext partition the degree by
    the neighbor's community; eps counts the distinct external communities
    reached; lambda is the population standard deviation of the link counts
    per connected external community.  With lambda_include_zeros=True the
    deviation is instead taken over all n_comms - 1 other communities,
    zero-count ones included.
    """
    if partition.assign.shape[0] != g.n:
        raise ValueError("partition does not cover the graph")
    a = partition.assign
    nc = partition.n_comms
    in_src = np.repeat(np.arange(g.n, dtype=np.int64), g.in_degrees)
    ko_int, ko_ext, eps_o, lam_o = _direction_profile(g.arc_src, g.out_indices, a, g.n, nc, lambda_include_zeros)
    ki_int, ki_ext, eps_i, lam_i = _direction_profile(in_src, g.in_indices, a, g.n, nc, lambda_include_zeros)
    return NodeCommunityProfile(
        k_int_out=ko_int, k_ext_out=ko_ext, eps_out=eps_o, lambda_out=lam_o,
        k_int_in=ki_int, k_ext_in=ki_ext, eps_in=eps_i, lambda_in=lam_i,
    )


def measures_from_profile(profile: NodeCommunityProfile, partition) -> np.ndarray:
    """The n x 8 measure matrix (column order per MEASURE_COLUMNS) from raw counts."""
    cols = (
        profile.k_int_out, profile.k_int_in,
        profile.eps_out, profile.eps_in,
        profile.k_ext_out, profile.k_ext_in,
        profile.lambda_out, profile.lambda_in,
    )
    return np.column_stack([z_score_within_community(c, partition) for c in cols])


def role_measures(g: DirectedGraph, partition, *, lambda_include_zeros: bool = False) -> np.ndarray:
    """The eight directional role measures as an n x 8 matrix.

    Columns follow MEASURE_COLUMNS: each is the within-community z-score of
    the matching raw profile field.
    """
    return measures_from_profile(
        community_profile(g, partition, lambda_include_zeros=lambda_include_zeros), partition
    )


def embeddedness(g: DirectedGraph, partition, u: int, direction: str = "total") -> float:
    """Fraction of u's links that stay inside its own community, in [0, 1].

    direction is "in", "out", or "total" (combined counts).  Raises
    UndefinedValueError when u has no links in the chosen direction.
    """
    if direction not in ("in", "out", "total"):
        raise ValueError("direction must be 'in', 'out' or 'total'")
    if not 0 <= u < g.n:
        raise IndexError(f"node {u} out of range for a graph with {g.n} nodes")
    own = partition.assign[u]
    k = 0
    k_int = 0
    if direction in ("out", "total"):
        nbrs = g.out_neighbors(u)
        k += nbrs.size
        k_int += int(np.count_nonzero(partition.assign[nbrs] == own))
    if direction in ("in", "total"):
        nbrs = g.in_neighbors(u)
        k += nbrs.size
        k_int += int(np.count_nonzero(partition.assign[nbrs] == own))
    if k == 0:
        raise UndefinedValueError(f"node {u} has no links in direction '{direction}'")
    return k_int / k


def embeddedness_values(profile: NodeCommunityProfile) -> np.ndarray:
    """Total-direction embeddedness per node; NaN where a node has no links."""
    k_int = (profile.k_int_out + profile.k_int_in).astype(np.float64)
    k = k_int + profile.k_ext_out + profile.k_ext_in
    out = np.full(k.shape, np.nan)
    ok = k > 0
    out[ok] = k_int[ok] / k[ok]
    return out


def participation_coefficient(g: DirectedGraph, partition, u: int) -> float:
    """1 minus the sum of squared per-community link fractions, on combined links.

    Counts in- and out-links together (the coefficient is direction
    agnostic).  A node with no links gets 0 by convention; the result lies
    in [0, 1).
    """
    if not 0 <= u < g.n:
        raise IndexError(f"node {u} out of range for a graph with {g.n} nodes")
    nbrs = np.concatenate([g.out_neighbors(u), g.in_neighbors(u)])
    k = nbrs.size
    if k == 0:
        return 0.0
    counts = np.bincount(partition.assign[nbrs])
    return float(1.0 - ((counts / k) ** 2).sum())


def participation_coefficients(g: DirectedGraph, partition) -> np.ndarray:
    """Vectorized participation_coefficient over all nodes."""
    if partition.assign.shape[0] != g.n:
        raise ValueError("partition does not cover the graph")
    a = partition.assign
    nc = partition.n_comms
    in_src = np.repeat(np.arange(g.n, dtype=np.int64), g.in_degrees)
    src = np.concatenate([g.arc_src, in_src])
    comm = np.concatenate([a[g.out_indices], a[g.in_indices]])
    key = src * np.int64(nc) + comm
    uniq, counts = np.unique(key, return_counts=True)
    unode = uniq // nc
    counts = counts.astype(np.float64)
    sq = np.bincount(unode, weights=counts * counts, minlength=g.n)
    k_tot = (g.out_degrees + g.in_degrees).astype(np.float64)
    p = np.zeros(g.n)
    ok = k_tot > 0
    p[ok] = 1.0 - sq[ok] / k_tot[ok] ** 2
    return p


@dataclass(frozen=True)
class GAThresholds:
    """Hub cut on the internal z-score plus participation cut points.

    The participation cut points are external constants (they come from the
    classical 7-role typology, not from anything computed here) and are kept
    as configuration.
    """

    z_hub: float = 2.5
    nonhub_cuts: tuple[float, float, float] = (0.05, 0.62, 0.80)
    hub_cuts: tuple[float, float] = (0.30, 0.75)


DEFAULT_GA_THRESHOLDS = GAThresholds()

_NONHUB_ROLES = ("ultra-peripheral non-hub", "peripheral non-hub", "connector non-hub", "kinless non-hub")
_HUB_ROLES = ("provincial hub", "connector hub", "kinless hub")


def _validate_ga(th: GAThresholds) -> None:
    for cuts, want in ((th.nonhub_cuts, 3), (th.hub_cuts, 2)):
        if len(cuts) != want:
            raise ConfigError(f"expected {want} participation cut points, got {len(cuts)}")
        if list(cuts) != sorted(cuts):
            raise ConfigError("participation cut points must be ascending")
        if any(not 0.0 <= c <= 1.0 for c in cuts):
            raise ConfigError("participation cut points must lie in [0, 1]")


def ga_role(z: float, p_coef: float, thresholds: GAThresholds | None = None) -> str:
    """Seven-class role from the internal z-score and the participation coefficient.

    z >= z_hub selects the hub branch (boundary inclusive); within a branch
    the participation coefficient is compared against ascending cut points.
    """
    th = thresholds if thresholds is not None else DEFAULT_GA_THRESHOLDS
    _validate_ga(th)
    if z >= th.z_hub:
        cuts, names = th.hub_cuts, _HUB_ROLES
    else:
        cuts, names = th.nonhub_cuts, _NONHUB_ROLES
    for cut, name in zip(cuts, names):
        if p_coef < cut:
            return name
    return names[-1]
