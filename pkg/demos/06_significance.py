"""Are the role groups statistically distinct on every measure?

One-way ANOVA per measure column over the detected groups, then pairwise
Welch t-tests with Bonferroni correction.
"""

import numpy as np

from roleforge import (MEASURE_COLUMNS, louvain_directed, one_way_anova,
                       pairwise_t_bonferroni, renumber_by_size, role_measures, select_k,
                       standardize)
from roleforge.errors import DegenerateVarianceError
from roleforge.synth import planted_partition_graph

g, _ = planted_partition_graph(n_comms=6, comm_size=80, intra_out=9, inter_out=2, seed=11)
partition, _ = louvain_directed(g)
mat = role_measures(g, partition)
res = renumber_by_size(select_k(standardize(mat), 2, 10, seed=0, restarts=4))
print(f"{res.k} role groups over {mat.shape[0]} nodes\n")

print(f"{'measure':>10}  {'F':>10}  {'df':>9}  p")
for j, name in enumerate(MEASURE_COLUMNS):
    try:
        a = one_way_anova(mat[:, j], res.assign)
        print(f"{name:>10}  {a.F:>10.2f}  ({a.df_between},{a.df_within})  {a.p:.3g}")
    except DegenerateVarianceError:
        print(f"{name:>10}  degenerate (zero within-group variance)")

j = MEASURE_COLUMNS.index("D_out")
pmat = pairwise_t_bonferroni(mat[:, j], res.assign)
print(f"\npairwise Bonferroni-adjusted p-values for {MEASURE_COLUMNS[j]}:")
with np.printoptions(precision=3, suppress=False):
    print(pmat)
