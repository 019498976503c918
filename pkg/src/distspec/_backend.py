"""Kernel selection: compiled extension when importable, pure Python otherwise.

Set ``DISTSPEC_PURE_PYTHON=1`` to force the fallback.
"""
from __future__ import annotations

import os

from . import _kernels_py

BACKEND = "python"
kernels = _kernels_py

if os.environ.get("DISTSPEC_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled  # type: ignore[attr-defined]
    except ImportError:
        pass
    else:
        kernels = _compiled
        BACKEND = "compiled"

bfs_distances = kernels.bfs_distances
min_mask = kernels.min_mask
jacobi_eigenvalues = kernels.jacobi_eigenvalues
