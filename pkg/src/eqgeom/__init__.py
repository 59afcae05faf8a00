"""Point-line geometries of binary equidistant codes.

Build the geometry of weight-``2m`` points of ``PG(n-1, 2)``, its cliques and
singular subspaces, the matching equidistant codes, its automorphism group and
the generalised Johnson graphs and q-ary analogues used alongside it.
"""

from __future__ import annotations

from importlib.metadata import PackageNotFoundError, version

from .kernels import BACKEND

try:
    __version__ = version("artifact")
except PackageNotFoundError:  # pragma: no cover - source tree without install
    __version__ = "0.0.0"

__all__ = ["BACKEND", "__version__"]
