"""Exact distance spectra of small connected graphs.

The public surface re-exports the graph, polynomial, spectral and family
layers; census and CLI live in their own modules.
"""
from __future__ import annotations

from ._backend import BACKEND
from .families import FamilyDescriptor, build, classify_eigencount, recognize, recognize_all
from .graph import (
    Graph,
    Partition,
    all_pairs_distances,
    complement,
    complete,
    disjoint_union,
    edgeless,
    glex_product,
    join,
    path,
)
from .graph6 import parse_graph6, write_graph6
from .linalg import approx_eigenvalues, char_poly_exact, count_eigen_with_multiplicity
from .poly import IntPoly
from .spectral import (
    are_cospectral,
    distance_char_poly,
    second_least_ge_minus2,
    spectrum,
    third_largest_le_minus1,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "FamilyDescriptor",
    "Graph",
    "IntPoly",
    "Partition",
    "all_pairs_distances",
    "approx_eigenvalues",
    "are_cospectral",
    "build",
    "char_poly_exact",
    "classify_eigencount",
    "complement",
    "complete",
    "count_eigen_with_multiplicity",
    "disjoint_union",
    "distance_char_poly",
    "edgeless",
    "glex_product",
    "join",
    "parse_graph6",
    "path",
    "recognize",
    "recognize_all",
    "second_least_ge_minus2",
    "spectrum",
    "third_largest_le_minus1",
    "write_graph6",
]
