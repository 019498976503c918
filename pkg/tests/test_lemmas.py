"""Property suites for the distance-spectrum lemmas (census n <= 7 plus random instances)."""
from __future__ import annotations

import random

import pytest

from distspec.families import (
    build,
    descriptors_up_to,
    factor_partition,
    recognize_all,
)
from distspec.graph import (
    Graph,
    all_pairs_distances,
    complete,
    components,
    complement,
    diameter,
    edgeless,
    glex_product,
    is_complete_multipartite,
    is_connected,
)
from distspec.linalg import approx_eigenvalues
from distspec.poly import count_roots, deflate_at
from distspec.spectral import (
    check_equitable,
    distance_char_poly,
    divisor_divides,
    multiplicity_at,
    second_largest_below_1_minus_sqrt3,
)



def _least_is(p, t):
    """Least root of ``p`` equals ``t`` exactly."""
    return count_roots(p, "less", t) == 0 and deflate_at(p, t)[1] >= 1


def test_least_eigenvalue_vs_diameter(census_graphs):
    for g in census_graphs:
        if g.n < 2:
            continue
        p = distance_char_poly(g)
        d = diameter(g)
        assert count_roots(p, "less", -d) >= 1 or deflate_at(p, -d)[1] >= 1
        assert _least_is(p, -d) == is_complete_multipartite(g)


def test_least_minus_two_multiplicity_complete_partite(census_graphs):
    for g in census_graphs:
        p = distance_char_poly(g)
        parts = len(components(complement(g)))
        is_kpartite = is_complete_multipartite(g) and 2 <= parts <= g.n - 1
        spectral = _least_is(p, -2) and deflate_at(p, -2)[1] == g.n - parts
        assert spectral == is_kpartite
        if is_kpartite:
            assert multiplicity_at(g, -2) == g.n - parts


def test_second_least_at_most_minus_one(census_graphs):
    for g in census_graphs:
        if not 4 <= g.n <= 7:
            continue
        p = distance_char_poly(g)
        # d(n-1) <= -1  <=>  at most n - 2 eigenvalues exceed -1
        assert count_roots(p, "greater", -1) <= g.n - 2
        equal = count_roots(p, "less", -1) <= 1 and count_roots(p, "greater", -1) <= g.n - 2 and (
            count_roots(p, "less", -1) + deflate_at(p, -1)[1] >= 2
        )
        # K_n is the degenerate member with an empty clique in the union
        is_complete = g.num_edges == g.n * (g.n - 1) // 2
        family = is_complete or any(fd.id == "KJOIN" for fd in recognize_all(g))
        assert equal == family, g


def test_second_largest_threshold_only_complete(census_graphs):
    for g in census_graphs:
        if g.n < 2:
            continue
        assert second_largest_below_1_minus_sqrt3(g) == (g.num_edges == g.n * (g.n - 1) // 2)


def _random_base(rng, n):
    while True:
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5]
        g = Graph.from_edges(n, pairs)
        if is_connected(g):
            return g


def test_twin_multiplicity_bounds_random_glex():
    rng = random.Random(2024)
    for _ in range(200):
        base = _random_base(rng, rng.randint(2, 5))
        kinds = [rng.choice("KE") for _ in range(base.n)]
        sizes = [rng.randint(1, 3) for _ in range(base.n)]
        parts = [complete(s) if k == "K" else edgeless(s) for k, s in zip(kinds, sizes)]
        g = glex_product(base, parts)
        need1 = sum(s - 1 for k, s in zip(kinds, sizes) if k == "K" and s >= 2)
        need2 = sum(s - 1 for k, s in zip(kinds, sizes) if k == "E" and s >= 2)
        assert multiplicity_at(g, -1) >= need1
        assert multiplicity_at(g, -2) >= need2


def test_divisor_matrix_divides_and_shares_top_eigenvalue():
    descriptors = list(descriptors_up_to(4))
    assert len(descriptors) > 1500
    for fd in descriptors:
        g = build(fd)
        part = factor_partition(fd)
        b = check_equitable(g, part)
        assert b is not None, fd
        assert divisor_divides(g, part)
        top_g = approx_eigenvalues(all_pairs_distances(g))[0]
        # B is not symmetric in general, so use a general eigensolver for it
        assert abs(max(_eigs_general(b)) - top_g) < 1e-8, fd


def _eigs_general(b):
    import numpy as np

    return np.linalg.eigvals(np.array(b, dtype=float)).real


def test_interlacing_random_matrices():
    rng = random.Random(99)
    for _ in range(200):
        n = rng.randint(2, 8)
        a = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                a[i][j] = a[j][i] = rng.randint(-5, 5)
        lam = approx_eigenvalues(a)
        for drop in range(n):
            keep = [i for i in range(n) if i != drop]
            mu = approx_eigenvalues([[a[i][j] for j in keep] for i in keep])
            for i in range(n - 1):
                assert lam[i] + 1e-8 >= mu[i] >= lam[i + 1] - 1e-8
