"""Compare the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]
"""
from __future__ import annotations

import argparse
import random
import timeit

from distspec import _kernels_py
from distspec.graph import Graph, _refine, is_connected

try:
    from distspec import _kernels
except ImportError:  # extension not built
    _kernels = None


def _random_connected(n: int, p: float, rng: random.Random) -> Graph:
    while True:
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
        g = Graph.from_edges(n, edges)
        if is_connected(g):
            return g


def workloads(seed: int = 7):
    rng = random.Random(seed)
    graphs = [_random_connected(14, 0.3, rng) for _ in range(50)]
    small = [_random_connected(8, 0.4, rng) for _ in range(50)]
    cells = []
    for g in small:
        col = _refine(g.n, g.adj, [0] * g.n)
        cells.append([[v for v in range(g.n) if col[v] == c] for c in range(max(col) + 1)])
    mats = []
    for _ in range(50):
        m = [[0.0] * 14 for _ in range(14)]
        for i in range(14):
            for j in range(i, 14):
                m[i][j] = m[j][i] = float(rng.randint(0, 5))
        mats.append(m)
    return {
        "bfs_distances (50 graphs, n=14)": lambda k: [k.bfs_distances(g.n, g.adj) for g in graphs],
        "min_mask (50 graphs, n=8, refined cells)": lambda k: [
            k.min_mask(g.n, g.adj, c) for g, c in zip(small, cells)
        ],
        "min_mask (K_{4,4}, one cell)": lambda k: k.min_mask(8, (0xF0,) * 4 + (0x0F,) * 4, [list(range(8))]),
        "jacobi_eigenvalues (50 matrices, 14x14)": lambda k: [k.jacobi_eigenvalues(m) for m in mats],
    }


def main() -> None:
    ap = argparse.ArgumentParser(description="kernel benchmark: compiled vs pure Python")
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = [("python", _kernels_py)] + ([("compiled", _kernels)] if _kernels else [])
    if _kernels is None:
        print("compiled extension not available; timing the Python fallback only")
    print(f"{'kernel':45s} " + " ".join(f"{name:>12s}" for name, _ in backends) + "   speedup")
    for label, fn in workloads().items():
        times = [min(timeit.repeat(lambda k=k: fn(k), number=1, repeat=args.repeat)) for _, k in backends]
        speed = f"{times[0] / times[1]:8.1f}x" if len(times) == 2 else ""
        print(f"{label:45s} " + " ".join(f"{t * 1e3:10.2f}ms" for t in times) + f"   {speed}")


if __name__ == "__main__":
    main()
