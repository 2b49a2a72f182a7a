"""Directed multigraphs with a partial translation map.

A translation quiver is a quiver together with an injective map ``tau``
from a subset of the vertices to the vertices such that for all vertices
``x, y`` with ``tau(y)`` defined, the number of arrows ``x -> y`` equals
the number of arrows ``tau(y) -> x`` (the mesh arrow-count axiom).  When
``tau`` is defined everywhere on a finite vertex set it is bijective and
the translation quiver is called *stable*.

Vertices are arbitrary hashable objects.  The builders in this package
use tuples of integers such as ``(1, 4)``; :func:`vertex_key` gives those
their natural order so that every listing in the package is
deterministic.  All structures are immutable after construction, so they
are safe to share between threads.
"""

from __future__ import annotations

import warnings
from collections import Counter
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Hashable, Iterable, Mapping

from .errors import QuiverkitWarning

Vertex = Hashable
Arrow = tuple[Vertex, Vertex]


def vertex_key(v: Vertex):
    """Deterministic sort key; integer tuples sort numerically."""
    if isinstance(v, tuple) and all(isinstance(c, int) for c in v):
        return (0, len(v), v, "")
    if isinstance(v, int):
        return (0, 1, (v,), "")
    return (1, 0, (), repr(v))


def vertex_label(v: Vertex) -> str:
    """Render a vertex for DOT/JSON output, e.g. ``(1,4)``."""
    if isinstance(v, tuple):
        return "(" + ",".join(str(c) for c in v) + ")"
    return str(v)


def arrow_key(a: Arrow):
    return (vertex_key(a[0]), vertex_key(a[1]))


class Quiver:
    """A finite directed multigraph.

    ``arrows`` is a multiset: repeated ``(source, target)`` pairs mean
    parallel arrows.  The constructor accepts arrows whose endpoints are
    not listed as vertices; :func:`validate_translation_quiver` reports
    such defects instead of the constructor raising, so that broken
    inputs can be examined.
    """

    __slots__ = ("_vertices", "_arrows", "_counts", "_out", "_in")

    def __init__(self, vertices: Iterable[Vertex], arrows: Iterable[Arrow] = ()):
        self._vertices = frozenset(vertices)
        self._arrows = tuple(sorted(((s, t) for s, t in arrows), key=arrow_key))
        self._counts = Counter(self._arrows)
        out: dict[Vertex, list[tuple[Vertex, int]]] = {v: [] for v in self._vertices}
        inn: dict[Vertex, list[tuple[Vertex, int]]] = {v: [] for v in self._vertices}
        for (s, t), c in sorted(self._counts.items(), key=lambda it: arrow_key(it[0])):
            out.setdefault(s, []).append((t, c))
            inn.setdefault(t, []).append((s, c))
        self._out = out
        self._in = inn

    @property
    def vertices(self) -> frozenset:
        return self._vertices

    @property
    def arrows(self) -> tuple[Arrow, ...]:
        return self._arrows

    def sorted_vertices(self) -> list[Vertex]:
        return sorted(self._vertices, key=vertex_key)

    def arrow_count(self, source: Vertex, target: Vertex) -> int:
        return self._counts.get((source, target), 0)

    def out(self, v: Vertex) -> tuple[tuple[Vertex, int], ...]:
        """Outgoing ``(target, multiplicity)`` pairs of ``v``."""
        return tuple(self._out.get(v, ()))

    def into(self, v: Vertex) -> tuple[tuple[Vertex, int], ...]:
        """Incoming ``(source, multiplicity)`` pairs of ``v``."""
        return tuple(self._in.get(v, ()))

    def out_degree(self, v: Vertex) -> int:
        return sum(c for _, c in self._out.get(v, ()))

    def in_degree(self, v: Vertex) -> int:
        return sum(c for _, c in self._in.get(v, ()))

    def __contains__(self, v: Vertex) -> bool:
        return v in self._vertices

    def __len__(self) -> int:
        return len(self._vertices)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Quiver):
            return NotImplemented
        return self._vertices == other._vertices and self._arrows == other._arrows

    def __hash__(self) -> int:
        return hash((self._vertices, self._arrows))

    def __repr__(self) -> str:
        return f"Quiver({len(self._vertices)} vertices, {len(self._arrows)} arrows)"


class TranslationQuiver:
    """A :class:`Quiver` plus a partial translation map ``tau``."""

    __slots__ = ("_quiver", "_tau", "_tau_inv")

    def __init__(self, quiver: Quiver, tau: Mapping[Vertex, Vertex]):
        self._quiver = quiver
        self._tau = {v: tau[v] for v in sorted(tau, key=vertex_key)}
        inv: dict[Vertex, Vertex] = {}
        for v, w in self._tau.items():
            inv.setdefault(w, v)
        self._tau_inv = inv

    @property
    def quiver(self) -> Quiver:
        return self._quiver

    @property
    def tau(self) -> Mapping[Vertex, Vertex]:
        return MappingProxyType(self._tau)

    @property
    def vertices(self) -> frozenset:
        return self._quiver.vertices

    @property
    def arrows(self) -> tuple[Arrow, ...]:
        return self._quiver.arrows

    def sorted_vertices(self) -> list[Vertex]:
        return self._quiver.sorted_vertices()

    def tau_of(self, v: Vertex, default=None):
        return self._tau.get(v, default)

    def tau_inv_of(self, v: Vertex, default=None):
        """A preimage of ``v`` under tau (unique when tau is injective)."""
        return self._tau_inv.get(v, default)

    @property
    def is_stable(self) -> bool:
        """True iff tau is total and surjective on the vertices."""
        vs = self._quiver.vertices
        return set(self._tau) == vs and set(self._tau.values()) == vs

    def __eq__(self, other) -> bool:
        if not isinstance(other, TranslationQuiver):
            return NotImplemented
        return self._quiver == other._quiver and self._tau == other._tau

    def __hash__(self) -> int:
        return hash((self._quiver, tuple(self._tau.items())))

    def __repr__(self) -> str:
        kind = "stable " if self.is_stable else ""
        return (
            f"TranslationQuiver({len(self._quiver)} vertices, "
            f"{len(self._quiver.arrows)} arrows, {kind}tau on {len(self._tau)})"
        )


@dataclass(frozen=True)
class Violation:
    """One defect found by validation.

    For mesh defects ``pair`` is ``(x, y)`` and ``counts`` is
    ``(#arrows x->y, #arrows tau(y)->x)``.
    """

    kind: str
    message: str
    pair: tuple | None = None
    counts: tuple[int, int] | None = None


@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    stable: bool
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    def __bool__(self) -> bool:
        return self.ok


def validate_translation_quiver(tq: TranslationQuiver) -> ValidationResult:
    """Check the translation-quiver axioms; violations are data, not errors.

    Checks, in order: arrow endpoints are vertices, no self-loops, tau
    endpoints are vertices, tau is injective, and the mesh axiom
    ``#(x -> y) == #(tau(y) -> x)`` for every y in the domain of tau.
    """
    q = tq.quiver
    vs = q.vertices
    violations: list[Violation] = []

    for s, t in dict.fromkeys(q.arrows):
        for end in (s, t):
            if end not in vs:
                violations.append(
                    Violation(
                        "arrow-endpoint",
                        f"arrow {vertex_label(s)}->{vertex_label(t)} uses "
                        f"non-vertex {vertex_label(end)}",
                        pair=(s, t),
                    )
                )
        if s == t:
            violations.append(
                Violation("self-loop", f"self-loop at {vertex_label(s)}", pair=(s, t))
            )

    tau = dict(tq.tau)
    for y, ty in tau.items():
        for end, role in ((y, "source"), (ty, "image")):
            if end not in vs:
                violations.append(
                    Violation(
                        "tau-endpoint",
                        f"tau {role} {vertex_label(end)} is not a vertex",
                        pair=(y, ty),
                    )
                )

    images = Counter(tau.values())
    for w, c in sorted(images.items(), key=lambda it: vertex_key(it[0])):
        if c > 1:
            clashing = tuple(sorted((y for y in tau if tau[y] == w), key=vertex_key))
            violations.append(
                Violation(
                    "tau-injectivity",
                    f"tau maps {len(clashing)} vertices to {vertex_label(w)}",
                    pair=clashing,
                )
            )

    for y in sorted(tau, key=vertex_key):
        ty = tau[y]
        sources = {x for x, _ in q.into(y)} | {x for x, _ in q.out(ty)}
        for x in sorted(sources, key=vertex_key):
            c_in = q.arrow_count(x, y)
            c_mesh = q.arrow_count(ty, x)
            if c_in != c_mesh:
                violations.append(
                    Violation(
                        "mesh",
                        f"mesh at {vertex_label(y)}: arrows "
                        f"{vertex_label(x)}->{vertex_label(y)} = {c_in} but "
                        f"{vertex_label(ty)}->{vertex_label(x)} = {c_mesh}",
                        pair=(x, y),
                        counts=(c_in, c_mesh),
                    )
                )

    stable = set(tau) == vs and set(tau.values()) == vs
    return ValidationResult(ok=not violations, stable=stable, violations=tuple(violations))


def connected_components(q: Quiver | TranslationQuiver) -> list[frozenset]:
    """Weakly connected components, arrows treated as undirected edges.

    Translation edges do not contribute to connectivity.  The list is
    sorted by (size descending, smallest vertex).
    """
    if isinstance(q, TranslationQuiver):
        q = q.quiver
    seen: set = set()
    comps: list[frozenset] = []
    for start in q.sorted_vertices():
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w, _ in q.out(v):
                if w not in comp and w in q.vertices:
                    comp.add(w)
                    stack.append(w)
            for w, _ in q.into(v):
                if w not in comp and w in q.vertices:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(frozenset(comp))
    comps.sort(key=lambda c: (-len(c), min(vertex_key(v) for v in c)))
    return comps


def translation_components(tq: TranslationQuiver) -> list[frozenset]:
    """Components of a translation quiver: arrows plus translation links.

    Arrow-connected components that the translation maps into each other
    are merged; this matters only for quivers with arrow-less vertices
    (e.g. the diagonal quiver of a square), where the translation is the
    only structure tying the vertex set together.  Sorted like
    :func:`connected_components`.
    """
    adj: dict[Vertex, set[Vertex]] = {v: set() for v in tq.vertices}
    for s, t in tq.arrows:
        if s in adj and t in adj:
            adj[s].add(t)
            adj[t].add(s)
    for y, ty in tq.tau.items():
        if y in adj and ty in adj:
            adj[y].add(ty)
            adj[ty].add(y)
    seen: set = set()
    comps: list[frozenset] = []
    for start in tq.sorted_vertices():
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(frozenset(comp))
    comps.sort(key=lambda c: (-len(c), min(vertex_key(v) for v in c)))
    return comps


def restrict_translation_quiver(
    tq: TranslationQuiver, vertices: Iterable[Vertex]
) -> tuple[TranslationQuiver, tuple[tuple[Vertex, Vertex], ...]]:
    """Restrict arrows and tau to a vertex subset.

    Returns the restricted translation quiver and the tau pairs that were
    dropped because exactly one endpoint lies inside the subset.
    """
    keep = frozenset(vertices)
    arrows = [(s, t) for s, t in tq.arrows if s in keep and t in keep]
    tau = {}
    dropped = []
    for y, ty in tq.tau.items():
        if y in keep and ty in keep:
            tau[y] = ty
        elif (y in keep) != (ty in keep):
            dropped.append((y, ty))
    sub = TranslationQuiver(Quiver(keep, arrows), tau)
    return sub, tuple(dropped)


def split_components(
    tq: TranslationQuiver, warn: bool = True, use_tau: bool = True
) -> list[TranslationQuiver]:
    """One restricted translation quiver per component.

    By default components follow arrows and translation links (see
    :func:`translation_components`); pass ``use_tau=False`` for the
    arrows-only notion.  If tau maps a component outside itself this is
    reported as a warning, never a failure.
    """
    parts = (
        translation_components(tq) if use_tau else connected_components(tq.quiver)
    )
    out = []
    for comp in parts:
        sub, dropped = restrict_translation_quiver(tq, comp)
        if dropped and warn:
            pairs = ", ".join(
                f"{vertex_label(y)}->{vertex_label(t)}" for y, t in dropped
            )
            warnings.warn(
                f"translation map leaves a component: {pairs}", QuiverkitWarning,
                stacklevel=2,
            )
        out.append(sub)
    return out


def tau_orbits(tq: TranslationQuiver) -> list[tuple[Vertex, ...]]:
    """Cycles/chains of the translation map, mostly useful for display."""
    succ = dict(tq.tau)
    starts = [v for v in tq.sorted_vertices() if tq.tau_inv_of(v) is None]
    orbits = []
    visited: set = set()
    for start in starts + [v for v in tq.sorted_vertices() if v not in visited]:
        if start in visited or start not in tq.vertices:
            continue
        orbit = [start]
        visited.add(start)
        v = start
        while v in succ and succ[v] not in visited:
            v = succ[v]
            orbit.append(v)
            visited.add(v)
        orbits.append(tuple(orbit))
    return orbits
