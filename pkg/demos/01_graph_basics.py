"""Load a directed follow graph from an edge list and inspect neighborhoods.

The toy network has two tight groups {0,1,2} and {3,4,5} joined by two
cross links.  Arc u->v means "u follows v": out-neighbors are followees,
in-neighbors are followers.
"""

import tempfile
from pathlib import Path

from roleforge import Partition, community_link_counts, degrees, load_edge_list

EDGE_LINES = """\
# toy follow network
0 1
1 0
1 2
0 3
4 0
3 4
4 5
5 3
"""

with tempfile.TemporaryDirectory() as td:
    path = Path(td) / "toy.txt"
    path.write_text(EDGE_LINES)
    g = load_edge_list(path)

print(f"loaded n={g.n} nodes, m={g.m} arcs")
for u in range(g.n):
    k_in, k_out, k = degrees(g, u)
    print(f"  node {u}: followers={k_in} followees={k_out} "
          f"out-neighbors={g.out_neighbors(u).tolist()}")

partition = Partition.from_labels([0, 0, 0, 1, 1, 1])
print("\nper-community link counts for node 0:")
print("  outgoing:", community_link_counts(g, 0, partition, "out"))
print("  incoming:", community_link_counts(g, 0, partition, "in"))
