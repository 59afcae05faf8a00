"""Backend selection for the hot kernels.

The compiled extension is used when it imports; otherwise the pure-Python
twin is used. Set ``EQGEOM_PURE=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _purekernels as pure

if os.environ.get("EQGEOM_PURE", "") not in ("", "0"):
    _impl = pure
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = pure

BACKEND: str = _impl.BACKEND
intersection_graph = _impl.intersection_graph
maximal_cliques = _impl.maximal_cliques
bfs_distances = _impl.bfs_distances
diameter = _impl.diameter
refine_colors = _impl.refine_colors
Classifier = _impl.Classifier

__all__ = [
    "BACKEND",
    "Classifier",
    "bfs_distances",
    "diameter",
    "intersection_graph",
    "maximal_cliques",
    "pure",
    "refine_colors",
]
