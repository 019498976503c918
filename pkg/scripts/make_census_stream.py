"""Write the connected 7-vertex graphs from the networkx atlas as a graph6 stream.

Development helper only: networkx is not a runtime dependency. The output is
committed under tests/data so the test suite never needs networkx.

    python3 scripts/make_census_stream.py tests/data/connected7.g6
"""
from __future__ import annotations

import argparse

import networkx as nx


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("output")
    ap.add_argument("--order", type=int, default=7, help="atlas covers orders up to 7")
    args = ap.parse_args()
    graphs = [g for g in nx.graph_atlas_g() if g.number_of_nodes() == args.order and nx.is_connected(g)]
    with open(args.output, "w") as fh:
        for g in graphs:
            fh.write(nx.to_graph6_bytes(g, header=False).decode().strip() + "\n")
    print(f"wrote {len(graphs)} graphs to {args.output}")


if __name__ == "__main__":
    main()
