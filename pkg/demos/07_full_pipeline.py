"""The whole pipeline in one call, driven exactly like the CLI `run` command.

A mid-sized network with planted communities and mass-following accounts is
written to disk, then: communities -> measures -> clustering -> capitalist
detection -> significance tests -> report, all seeded, with a checksum
manifest at the end.  Rerunning with the same seed reproduces identical
artifact checksums.
"""

import tempfile
from pathlib import Path

from roleforge.cli import PipelineConfig, run_pipeline
from roleforge.graph import save_edge_list
from roleforge.synth import capitalist_community_network

g, truth, planted = capitalist_community_network(
    n_comms=10, comm_size=400, n_capitalists=40, cap_ext_out=700, seed=1
)

with tempfile.TemporaryDirectory() as td:
    edges = Path(td) / "network.txt"
    save_edge_list(g, edges)
    print(f"wrote n={g.n} m={g.m} arcs to {edges}\n")

    cfg = PipelineConfig(input=str(edges), output_dir=str(Path(td) / "out"),
                         seed=0, kmeans_restarts=4)
    manifest = run_pipeline(cfg)

    print("\nartifact checksums (first 16 hex chars):")
    for name, digest in manifest["artifacts"].items():
        print(f"  {digest[:16]}  {name}")

    print("\n--- report.txt ---")
    print((Path(td) / "out" / "report.txt").read_text())
