"""Sectional paths and powers of translation quivers.

A path ``x_0 -> x_1 -> ... -> x_L`` is *sectional* if at every interior
step ``tau(x_{i+1}) != x_{i-1}`` (checked only where tau is defined).
The m-th power of a translation quiver keeps the vertices, takes the
sectional paths of length m as arrows (with multiplicity the number of
such paths) and composes the translation with itself m times.  Powers of
a connected quiver are usually disconnected; :func:`decompose` splits
them into component translation quivers.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .config import default_vertex_cap
from .errors import SizeCapError
from .iso import iso_translation_quivers
from .polygon import gamma
from .quiver import (
    Quiver,
    TranslationQuiver,
    Vertex,
    split_components,
    vertex_key,
)

Path = tuple[Vertex, ...]


def is_sectional(path: Path, tq: TranslationQuiver) -> bool:
    """Whether a path avoids doubling back through the translation.

    Raises ``ValueError`` if consecutive entries are not arrows of the
    quiver.  Paths of length 0 or 1 are trivially sectional.
    """
    for s, t in zip(path, path[1:]):
        if tq.quiver.arrow_count(s, t) == 0:
            raise ValueError(f"{s!r} -> {t!r} is not an arrow")
    for i in range(1, len(path) - 1):
        ahead = tq.tau_of(path[i + 1])
        if ahead is not None and ahead == path[i - 1]:
            return False
    return True


def sectional_paths(tq: TranslationQuiver, length: int) -> list[Path]:
    """All sectional paths of the given arrow length, in vertex order.

    Parallel arrows multiply path counts, so the result is a multiset
    when the quiver has arrow multiplicities above one.
    """
    if length < 0:
        raise ValueError("length must be non-negative")
    q = tq.quiver
    paths: list[Path] = []

    def walk(path: list[Vertex]) -> None:
        if len(path) == length + 1:
            paths.append(tuple(path))
            return
        last = path[-1]
        for nxt, mult in q.out(last):
            if len(path) >= 2:
                back = tq.tau_of(nxt)
                if back is not None and back == path[-2]:
                    continue
            for _ in range(mult):
                path.append(nxt)
                walk(path)
                path.pop()

    for start in q.sorted_vertices():
        walk([start])
    return paths


def compose_tau(tq: TranslationQuiver, times: int) -> dict:
    """The translation composed with itself ``times`` times (partial)."""
    tau = {}
    for v in tq.sorted_vertices():
        w = v
        for _ in range(times):
            w = tq.tau_of(w)
            if w is None:
                break
        else:
            tau[v] = w
            continue
    return tau


@dataclass(frozen=True)
class PowerQuiver:
    """Result of taking the m-th power of a translation quiver."""

    base: TranslationQuiver
    m: int
    result: TranslationQuiver


def power(tq: TranslationQuiver, m: int) -> PowerQuiver:
    """The m-th power: same vertices, sectional length-m paths as arrows.

    Arrow multiplicity equals the number of sectional paths between the
    endpoints; the translation is the m-fold composite.  For a stable
    input the result is stable again.
    """
    if m < 1:
        raise ValueError(f"need m >= 1, got m={m}")
    counts = Counter((p[0], p[-1]) for p in sectional_paths(tq, m))
    arrows = []
    for (s, t), c in sorted(counts.items(), key=lambda it: (vertex_key(it[0][0]), vertex_key(it[0][1]))):
        arrows.extend([(s, t)] * c)
    result = TranslationQuiver(Quiver(tq.vertices, arrows), compose_tau(tq, m))
    return PowerQuiver(base=tq, m=m, result=result)


def decompose(pq: PowerQuiver | TranslationQuiver) -> list[TranslationQuiver]:
    """Component translation quivers, largest first.

    Components follow arrows and translation links, so arrow-less vertex
    classes tied together by the translation (the n = 2 diagonal quivers)
    stay in one piece.  The translation is restricted componentwise; if
    it were ever to leave a component this is reported as a warning, not
    a failure.
    """
    tq = pq.result if isinstance(pq, PowerQuiver) else pq
    return split_components(tq)


def principal_component(
    n: int, m: int, cap: int | None = None, check: bool = True
) -> TranslationQuiver:
    """The component of ``power(gamma(n*m, 1), m)`` through the vertex (1, m+2).

    That component is a copy of ``gamma(n, m)``; with ``check=True`` the
    isomorphism is verified and an ``AssertionError`` means a genuine
    defect, not a recoverable condition.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got n={n}")
    if m < 1:
        raise ValueError(f"need m >= 1, got m={m}")
    N = n * m + 2
    cap_val = default_vertex_cap() if cap is None else cap
    base_size = N * (N - 3) // 2
    if base_size > cap_val:
        raise SizeCapError(
            f"power decomposition capped at {cap_val} vertices "
            f"(gamma({n * m},1) has {base_size})"
        )
    pq = power(gamma(n * m, 1), m)
    seed = (1, m + 2)
    for comp in decompose(pq):
        if seed in comp.vertices:
            if check:
                phi = iso_translation_quivers(comp, gamma(n, m), cap=cap)
                assert phi is not None, (
                    f"component through {seed} of the {m}-th power of "
                    f"gamma({n * m},1) is not isomorphic to gamma({n},{m})"
                )
            return comp
    raise AssertionError(f"vertex {seed} missing from the power of gamma({n * m},1)")
