"""Isomorphism search for translation quivers.

An isomorphism is a vertex bijection preserving arrow multiplicities in
both directions and commuting with the translation maps (including
where they are defined).  The instances handled here are small (a few
hundred vertices), so a color-refinement pass followed by anchored
backtracking is fast and needs no canonical-form machinery.  Candidate
lists are ordered by :func:`~quiverkit.quiver.vertex_key`, which makes
the returned bijection deterministic.
"""

from __future__ import annotations

from collections import Counter

from .config import default_vertex_cap
from .errors import SizeCapError
from .quiver import TranslationQuiver, Vertex, vertex_key

_NO_COLOR = -1


def _refine(a: TranslationQuiver, b: TranslationQuiver) -> tuple[dict, dict]:
    """Joint color refinement of both quivers.

    Colors start from local degree/translation data and are refined by
    neighbor-color multisets until stable.  Vertices that can correspond
    under an isomorphism always share a color.
    """
    tagged = [(0, a), (1, b)]
    color: dict[tuple[int, Vertex], int] = {}

    sig = {}
    for tag, tq in tagged:
        for v in tq.sorted_vertices():
            sig[(tag, v)] = (
                tq.quiver.out_degree(v),
                tq.quiver.in_degree(v),
                tq.tau_of(v) is not None,
                tq.tau_inv_of(v) is not None,
            )
    palette = {s: i for i, s in enumerate(sorted(set(sig.values())))}
    color = {k: palette[s] for k, s in sig.items()}

    ncolors = len(palette)
    while True:
        sig = {}
        for tag, tq in tagged:
            for v in tq.sorted_vertices():
                key = (tag, v)
                out_sig = tuple(
                    sorted((color[(tag, w)], c) for w, c in tq.quiver.out(v))
                )
                in_sig = tuple(
                    sorted((color[(tag, w)], c) for w, c in tq.quiver.into(v))
                )
                ty = tq.tau_of(v)
                pre = tq.tau_inv_of(v)
                sig[key] = (
                    color[key],
                    out_sig,
                    in_sig,
                    color[(tag, ty)] if ty is not None else _NO_COLOR,
                    color[(tag, pre)] if pre is not None else _NO_COLOR,
                )
        palette = {s: i for i, s in enumerate(sorted(set(sig.values())))}
        color = {k: palette[s] for k, s in sig.items()}
        if len(palette) == ncolors:
            break
        ncolors = len(palette)

    color_a = {v: color[(0, v)] for v in a.vertices}
    color_b = {v: color[(1, v)] for v in b.vertices}
    return color_a, color_b


def check_iso(a: TranslationQuiver, b: TranslationQuiver, phi: dict) -> bool:
    """Verify that ``phi`` really is a translation-quiver isomorphism."""
    if set(phi) != set(a.vertices) or set(phi.values()) != set(b.vertices):
        return False
    if len(set(phi.values())) != len(phi):
        return False
    cnt_a = Counter(a.arrows)
    cnt_b = Counter(b.arrows)
    if Counter((phi[s], phi[t]) for (s, t) in cnt_a.elements()) != cnt_b:
        return False
    for y in a.vertices:
        ty = a.tau_of(y)
        tb = b.tau_of(phi[y])
        if (ty is None) != (tb is None):
            return False
        if ty is not None and phi[ty] != tb:
            return False
    return True


def iso_translation_quivers(
    a: TranslationQuiver, b: TranslationQuiver, cap: int | None = None
) -> dict | None:
    """A vertex bijection a -> b respecting arrows and tau, or ``None``.

    Raises :class:`SizeCapError` when either side exceeds the vertex cap
    (default 5000, overridable via ``QUIVERKIT_CAP``).
    """
    cap = default_vertex_cap() if cap is None else cap
    if len(a.vertices) > cap or len(b.vertices) > cap:
        raise SizeCapError(
            f"isomorphism search capped at {cap} vertices "
            f"(got {len(a.vertices)} and {len(b.vertices)})"
        )
    if len(a.vertices) != len(b.vertices):
        return None
    if len(a.arrows) != len(b.arrows) or len(a.tau) != len(b.tau):
        return None

    color_a, color_b = _refine(a, b)
    if Counter(color_a.values()) != Counter(color_b.values()):
        return None

    by_color_b: dict[int, list[Vertex]] = {}
    for v in sorted(b.vertices, key=vertex_key):
        by_color_b.setdefault(color_b[v], []).append(v)

    order = sorted(a.vertices, key=vertex_key)
    qa, qb = a.quiver, b.quiver
    mapping: dict[Vertex, Vertex] = {}
    used: set[Vertex] = set()

    def pick_next() -> Vertex:
        # Prefer vertices constrained by already-mapped neighborhood.
        best = None
        best_rank = None
        for x in order:
            if x in mapping:
                continue
            anchored = any(
                w in mapping for w, _ in qa.out(x)
            ) or any(w in mapping for w, _ in qa.into(x))
            ta = a.tau_of(x)
            pre = a.tau_inv_of(x)
            anchored = anchored or (ta in mapping) or (pre in mapping)
            rank = (
                0 if anchored else 1,
                len(by_color_b.get(color_a[x], ())),
                vertex_key(x),
            )
            if best_rank is None or rank < best_rank:
                best, best_rank = x, rank
        return best

    def feasible(x: Vertex, y: Vertex) -> bool:
        ta, tb = a.tau_of(x), b.tau_of(y)
        if (ta is None) != (tb is None):
            return False
        if ta is not None and ta in mapping and mapping[ta] != tb:
            return False
        pa, pb = a.tau_inv_of(x), b.tau_inv_of(y)
        if (pa is None) != (pb is None):
            return False
        if pa is not None and pa in mapping and mapping[pa] != pb:
            return False
        for u, v in mapping.items():
            if qa.arrow_count(x, u) != qb.arrow_count(y, v):
                return False
            if qa.arrow_count(u, x) != qb.arrow_count(v, y):
                return False
        return True

    def extend() -> bool:
        if len(mapping) == len(order):
            return True
        x = pick_next()
        for y in by_color_b.get(color_a[x], ()):
            if y in used or not feasible(x, y):
                continue
            mapping[x] = y
            used.add(y)
            if extend():
                return True
            del mapping[x]
            used.discard(y)
        return False

    if extend():
        assert check_iso(a, b, mapping)
        return dict(mapping)
    return None
