"""Objective role groups: standardize, k-means over k in [2, 15], pick the
best k by the Davies-Bouldin index, and name the groups.

First a sanity check on synthetic blobs (the planted k is recovered), then
the real thing on a planted network's measure matrix.
"""

import numpy as np

from roleforge import (MEASURE_COLUMNS, label_role, louvain_directed, renumber_by_size,
                       role_measures, select_k, standardize)
from roleforge.synth import planted_partition_graph

rng = np.random.default_rng(0)
centers = 6.0 * np.eye(8)[:4]
blob_data = np.vstack([c + 0.1 * rng.standard_normal((100, 8)) for c in centers])
res = select_k(blob_data, 2, 15, seed=0, restarts=4)
print(f"4 planted blobs -> selected k={res.k} (Davies-Bouldin {res.db_index:.4f})")

g, _ = planted_partition_graph(n_comms=6, comm_size=80, intra_out=9, inter_out=3, seed=11)
partition, _ = louvain_directed(g)
mat = role_measures(g, partition)
res = select_k(standardize(mat), 2, 10, seed=0, restarts=6)
res = renumber_by_size(res)
sizes = np.bincount(res.assign, minlength=res.k)

print(f"\nmeasure-space clustering: k={res.k}, Davies-Bouldin {res.db_index:.4f}")
print("group  size  role")
for i in range(res.k):
    role = label_role(res.centroids[i])
    print(f"{i + 1:>5}  {int(sizes[i]):>4}  {role}")
print("\ncentroids (standardized measure space):")
print("group  " + "  ".join(f"{c:>9}" for c in MEASURE_COLUMNS))
for i in range(res.k):
    print(f"{i + 1:>5}  " + "  ".join(f"{v:+9.3f}" for v in res.centroids[i]))
