from __future__ import annotations

import pytest

from distspec.families import FamilyDescriptor, build, factor_partition
from distspec.graph import (
    ArityError,
    InvalidSetError,
    NotConnectedError,
    Partition,
    complete,
    complete_multipartite,
    cycle,
    edgeless,
    glex_product,
    path,
)
from distspec.poly import IntPoly
from distspec.spectral import (
    PreconditionError,
    are_cospectral,
    check_equitable,
    coarsest_equitable,
    distance_char_poly,
    eigencount_minus12,
    multiplicity_at,
    second_largest_below_1_minus_sqrt3,
    second_least_ge_minus2,
    spectrum,
    third_largest_le_minus1,
)


def test_spectrum_k3():
    s = spectrum(complete(3))
    assert [(e.root.exact, e.mult) for e in s.entries] == [(2, 1), (-1, 2)]
    assert s.order == 3
    assert s.values() == [2.0, -1.0, -1.0]
    assert s.multiplicity(-1) == 2
    assert s.to_json() == [{"root": "2", "approx": 2.0, "mult": 1}, {"root": "-1", "approx": -1.0, "mult": 2}]


def test_spectrum_p4_irrational_roots():
    s = spectrum(path(4))
    assert s.order == 4 and all(e.root.exact is None for e in s.entries)
    js = s.to_json()
    assert isinstance(js[0]["root"], list)
    assert s.values()[2] == pytest.approx(-1.1623, abs=1e-4)


def test_char_poly_needs_connected():
    with pytest.raises(NotConnectedError):
        distance_char_poly(edgeless(2))


def test_multiplicities():
    k23 = complete_multipartite(2, 3)
    assert multiplicity_at(k23, -2) == 3
    assert multiplicity_at(complete(5), -1) == 4
    assert eigencount_minus12(complete(5)) == 4


def test_threshold_predicates():
    assert not third_largest_le_minus1(path(5))   # -0.7639
    assert third_largest_le_minus1(path(4))       # -1.1623
    assert third_largest_le_minus1(complete(4))   # -1 exactly
    assert second_least_ge_minus2(complete_multipartite(2, 3))
    assert second_least_ge_minus2(path(5))        # only -5.2361 is below -2
    assert not second_least_ge_minus2(path(6))    # -2.4295
    with pytest.raises(ArityError):
        third_largest_le_minus1(complete(2))
    with pytest.raises(ArityError):
        second_least_ge_minus2(complete(1))


def test_second_largest_predicate():
    assert second_largest_below_1_minus_sqrt3(complete(2))
    assert second_largest_below_1_minus_sqrt3(complete(6))
    # K_{1,2} sits exactly on the threshold
    assert not second_largest_below_1_minus_sqrt3(path(3))
    assert not second_largest_below_1_minus_sqrt3(cycle(4))
    with pytest.raises(ArityError):
        second_largest_below_1_minus_sqrt3(complete(1))


def test_cospectral():
    assert are_cospectral(path(4), path(4))
    assert not are_cospectral(path(4), complete(4))
    assert not are_cospectral(path(3), path(4))


def test_equitable_partitions():
    k23 = complete_multipartite(2, 3)
    side = Partition.of([[0, 1], [2, 3, 4]], 5)
    assert check_equitable(k23, side) == [[2, 3], [2, 4]]
    assert check_equitable(path(4), Partition.of([[0, 1], [2, 3]], 4)) is None
    # the coarsest equitable partition of a vertex-transitive graph is one block
    assert len(coarsest_equitable(cycle(5)).blocks) == 1
    assert coarsest_equitable(path(4)).blocks == ((0, 3), (1, 2))
    with pytest.raises(InvalidSetError):
        check_equitable(path(4), Partition((tuple([0, 1]),), ("x",)))


def test_coarsest_refines_seed():
    seed = Partition.of([[0], [1, 2, 3]], 4)
    p = coarsest_equitable(cycle(4), seed)
    assert (0,) in p.blocks
    assert check_equitable(cycle(4), p) is not None


def test_divisor_divides_examples():
    from distspec.spectral import divisor_divides

    fd = FamilyDescriptor("J1", (1, 2, 1, 1))
    assert divisor_divides(build(fd), factor_partition(fd))
    assert divisor_divides(complete_multipartite(2, 3), Partition.of([[0, 1], [2, 3, 4]], 5))
    with pytest.raises(PreconditionError):
        divisor_divides(path(4), Partition.of([[0, 1], [2, 3]], 4))


def test_glex_twin_eigenvalues():
    g = glex_product(path(3), [complete(3), edgeless(2), complete(1)])
    p = distance_char_poly(g)
    assert multiplicity_at(g, -1) >= 2
    assert multiplicity_at(g, -2) >= 1
    assert p.degree == 6 and isinstance(p, IntPoly)
