from __future__ import annotations

import itertools
import os
import random
import subprocess
import sys

import pytest

from distspec import _backend, _kernels_py
from distspec.graph import Graph

compiled = pytest.importorskip("distspec._kernels")


def random_graph(rng, n, p=0.4):
    return Graph.from_edges(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


def test_backend_selected():
    assert _backend.BACKEND in ("compiled", "python")
    assert _backend.BACKEND == "compiled"


def test_env_forces_pure_python():
    code = "from distspec import _backend; print(_backend.BACKEND)"
    env = dict(os.environ, DISTSPEC_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_bfs_parity():
    rng = random.Random(1)
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 12), rng.choice([0.2, 0.4, 0.7]))
        assert compiled.bfs_distances(g.n, list(g.adj)) == _kernels_py.bfs_distances(g.n, list(g.adj))


def test_min_mask_parity():
    rng = random.Random(2)
    for _ in range(100):
        n = rng.randint(1, 7)
        g = random_graph(rng, n)
        verts = list(range(n))
        rng.shuffle(verts)
        cut = sorted(rng.sample(range(1, n + 1), k=min(n, 2)))
        cells = [verts[a:b] for a, b in zip([0] + cut, cut) if a < b]
        if sum(map(len, cells)) < n:
            cells.append(verts[sum(map(len, cells)):])
        assert compiled.min_mask(n, list(g.adj), cells) == _kernels_py.min_mask(n, list(g.adj), cells)


def test_min_mask_order_limit():
    with pytest.raises(ValueError):
        _kernels_py.min_mask(12, [0] * 12, [list(range(12))])
    with pytest.raises(ValueError):
        compiled.min_mask(12, [0] * 12, [list(range(12))])


def test_jacobi_parity():
    rng = random.Random(3)
    for _ in range(100):
        n = rng.randint(1, 14)
        m = [[0.0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                m[i][j] = m[j][i] = float(rng.randint(-9, 9))
        a = compiled.jacobi_eigenvalues([row[:] for row in m])
        b = _kernels_py.jacobi_eigenvalues([row[:] for row in m])
        assert max(abs(x - y) for x, y in zip(a, b)) < 1e-9
