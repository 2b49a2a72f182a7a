"""Size caps.

The default vertex cap guards the search-type operations (isomorphism,
powers, classification); ``QUIVERKIT_CAP`` in the environment overrides
it.  Angulation enumeration has its own polygon-size cap because its
output grows like a Fuss-Catalan number.
"""

from __future__ import annotations

import os

DEFAULT_VERTEX_CAP = 5000
DEFAULT_ANGULATION_POLYGON_CAP = 16


def default_vertex_cap() -> int:
    """Vertex cap from ``QUIVERKIT_CAP``, else 5000."""
    raw = os.environ.get("QUIVERKIT_CAP")
    if raw is None or not raw.strip():
        return DEFAULT_VERTEX_CAP
    return int(raw)
