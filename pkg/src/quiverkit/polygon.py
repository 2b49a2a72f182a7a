"""Diagonals of polygons and the translation quivers they generate.

Work in a convex polygon with vertices labeled 1..N clockwise.  A
diagonal is an unordered pair at cyclic distance at least 2; it is
stored canonically as ``(i, j)`` with ``i < j``.  Inside an
(n*m + 2)-gon the *m-divisible* diagonals are those cutting the polygon
into an (m*j + 2)-gon and an (m*(n-j) + 2)-gon; their quiver
``gamma(n, m)`` has arrows ``(i,j) -> (i,j+m)`` and ``(i,j) -> (i+m,j)``
whenever the image is again such a diagonal (labels modulo N) and the
translation subtracts m from both coordinates.  Maximal pairwise
non-crossing collections of these diagonals are the (m+2)-angulations of
the polygon; for m = 1 they are the triangulations, counted by the
Catalan numbers.

All arithmetic uses representatives 1..N (never 0) so results line up
with hand-labeled pictures.
"""

from __future__ import annotations

from .config import DEFAULT_ANGULATION_POLYGON_CAP
from .errors import SizeCapError
from .quiver import Quiver, TranslationQuiver

Diagonal = tuple[int, int]


def normalize_pair(pair: tuple[int, int], N: int) -> Diagonal:
    """Canonical form of an unordered vertex pair, labels folded to 1..N."""
    i = (pair[0] - 1) % N + 1
    j = (pair[1] - 1) % N + 1
    return (i, j) if i <= j else (j, i)


def cyclic_gap(d: tuple[int, int], N: int) -> int:
    """Minimal cyclic distance between the endpoints."""
    i, j = normalize_pair(d, N)
    raw = (j - i) % N
    return min(raw, N - raw)


def is_diagonal(d: tuple[int, int], N: int) -> bool:
    return cyclic_gap(d, N) >= 2


def diagonals(N: int) -> list[Diagonal]:
    """All diagonals of the N-gon, canonical and sorted."""
    if N < 3:
        raise ValueError(f"polygon needs at least 3 vertices, got {N}")
    return [
        (i, j)
        for i in range(1, N + 1)
        for j in range(i + 1, N + 1)
        if is_diagonal((i, j), N)
    ]


def is_m_diagonal(d: tuple[int, int], n: int, m: int) -> bool:
    """Does ``d`` cut the (n*m+2)-gon into polygons of sizes m*j+2 and m*(n-j)+2?

    Equivalently: some cyclic gap g of ``d`` equals m*j + 1 for an integer
    1 <= j <= n - 1.  (If one gap works so does the other, since the gaps
    sum to n*m + 2.)  With m = 1 every diagonal qualifies.
    """
    N = n * m + 2
    g = cyclic_gap(d, N)
    if g < 2:
        return False
    if (g - 1) % m != 0:
        return False
    j = (g - 1) // m
    return 1 <= j <= n - 1


def m_diagonals(n: int, m: int) -> list[Diagonal]:
    N = n * m + 2
    return [d for d in diagonals(N) if is_m_diagonal(d, n, m)]


def crossing(d1: Diagonal, d2: Diagonal) -> bool:
    """Strict interleaving of endpoints around the cycle.

    Expects canonical pairs.  Sharing an endpoint never counts as
    crossing.
    """
    a, b = d1
    c, d = d2
    if len({a, b, c, d}) < 4:
        return False
    return (a < c < b) != (a < d < b)


def row_of(d: tuple[int, int], N: int) -> int:
    """Row index of a diagonal: minimal cyclic gap minus one.

    Rows index the horizontal layers of the diagonal quiver of the
    N-gon; the wrap-around identification means e.g. (1,7) in an octagon
    sits in row 1, not row 5.
    """
    g = cyclic_gap(d, N)
    if g < 2:
        raise ValueError(f"{d} is not a diagonal of the {N}-gon")
    return g - 1


def gamma(n: int, m: int = 1) -> TranslationQuiver:
    """The stable translation quiver of m-divisible diagonals of the (n*m+2)-gon.

    Arrows go ``(i,j) -> (i,j+m)`` and ``(i,j) -> (i+m,j)`` whenever the
    image is again a vertex, generated from both ordered representatives
    of each unordered pair so the wrap-around arrows appear; the
    translation sends ``(i,j)`` to ``(i-m,j-m)``.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got n={n}")
    if m < 1:
        raise ValueError(f"need m >= 1, got m={m}")
    N = n * m + 2
    verts = m_diagonals(n, m)
    vert_set = set(verts)

    arrows = set()
    for d in verts:
        for (i, j) in (d, (d[1], d[0])):
            for cand in ((i, j + m), (i + m, j)):
                tgt = normalize_pair(cand, N)
                if tgt in vert_set:
                    arrows.add((d, tgt))

    tau = {d: normalize_pair((d[0] - m, d[1] - m), N) for d in verts}
    return TranslationQuiver(Quiver(verts, sorted(arrows)), tau)


def enumerate_angulations(
    n: int, m: int = 1, polygon_cap: int | None = None
) -> list[tuple[Diagonal, ...]]:
    """All maximal sets of pairwise non-crossing m-divisible diagonals.

    Each result is a sorted tuple of diagonals; the list is sorted
    lexicographically.  Maximality is checked by attempted extension
    with every remaining compatible diagonal, and sets are generated in
    increasing index order so each one appears exactly once.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got n={n}")
    if m < 1:
        raise ValueError(f"need m >= 1, got m={m}")
    N = n * m + 2
    cap = DEFAULT_ANGULATION_POLYGON_CAP if polygon_cap is None else polygon_cap
    if N > cap:
        raise SizeCapError(
            f"angulation enumeration capped at {cap}-gons (got {N}-gon); "
            "raise polygon_cap explicitly to override"
        )

    diags = m_diagonals(n, m)
    k = len(diags)
    compat = [[not crossing(diags[a], diags[b]) for b in range(k)] for a in range(k)]

    results: list[tuple[Diagonal, ...]] = []

    def is_maximal(chosen: list[int]) -> bool:
        for c in range(k):
            if c in chosen:
                continue
            if all(compat[c][x] for x in chosen):
                return False
        return True

    def grow(chosen: list[int], start: int) -> None:
        extended = False
        for c in range(start, k):
            if all(compat[c][x] for x in chosen):
                chosen.append(c)
                grow(chosen, c + 1)
                chosen.pop()
                extended = True
        if not extended and is_maximal(chosen):
            results.append(tuple(diags[x] for x in chosen))

    grow([], 0)
    results.sort()
    return results
