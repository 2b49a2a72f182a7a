"""The infinite strip ZA_k, its shift, and finite orbit quotients.

The strip has vertices ``(p, i)`` with ``p`` any integer and row
``1 <= i <= k``; for the linear orientation 1 -> 2 -> ... -> k its arrows
are ``(p, i) -> (p, i+1)`` and ``(p, i+1) -> (p+1, i)``, and the
translation is ``tau(p, i) = (p-1, i)``.  The shift automorphism
``[1](p, i) = (p + i, k + 1 - i)`` moves each vertex to the matching spot
in the next triangular fundamental region and satisfies
``[1]∘[1] = tau^-(k+1)``.

Quotients of the strip by an automorphism ``g = tau^-s ∘ [r]`` are finite
stable translation quivers.  Because every admissible ``g`` strictly
increases the slice index ``p``, each g-orbit contains exactly one vertex
``v`` with ``v.p >= 0`` and ``g^-1(v).p < 0``; those vertices are the
canonical representatives, found by walking ``g`` itself, with no window
heuristics.  The same monotonicity makes the action free.

:func:`classify_components` decomposes the m-th power of the diagonal
quiver of an (n*m+2)-gon and matches every non-principal component
against orbit quotients by searching (k, s, r) triples.
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import default_vertex_cap
from .errors import NonFreeActionError, SizeCapError
from .iso import iso_translation_quivers
from .polygon import gamma
from .power import decompose, power
from .quiver import Quiver, TranslationQuiver, vertex_key

ZAVertex = tuple[int, int]


@dataclass(frozen=True)
class AutoEq:
    """The automorphism tau^-s ∘ [r] of the strip (s, r not both zero)."""

    s: int
    r: int

    def __post_init__(self):
        if self.s < 0 or self.r < 0:
            raise ValueError("s and r must be non-negative")
        if self.s == 0 and self.r == 0:
            raise ValueError("(s, r) = (0, 0) is the identity, not admissible")


@dataclass(frozen=True)
class ZARule:
    """Arrow/translation/shift rules of the strip with k rows."""

    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"need k >= 1, got k={self.k}")

    def is_vertex(self, v: ZAVertex) -> bool:
        return 1 <= v[1] <= self.k

    def arrows_from(self, v: ZAVertex) -> tuple[ZAVertex, ...]:
        p, i = v
        out = []
        if i < self.k:
            out.append((p, i + 1))
        if i > 1:
            out.append((p + 1, i - 1))
        return tuple(out)

    def arrows_into(self, v: ZAVertex) -> tuple[ZAVertex, ...]:
        p, i = v
        into = []
        if i > 1:
            into.append((p, i - 1))
        if i < self.k:
            into.append((p - 1, i + 1))
        return tuple(into)

    def tau(self, v: ZAVertex) -> ZAVertex:
        return (v[0] - 1, v[1])

    def tau_inv(self, v: ZAVertex) -> ZAVertex:
        return (v[0] + 1, v[1])

    def shift(self, v: ZAVertex) -> ZAVertex:
        p, i = v
        return (p + i, self.k + 1 - i)

    def shift_inv(self, v: ZAVertex) -> ZAVertex:
        p, i = v
        return (p - (self.k + 1) + i, self.k + 1 - i)

    def window(self, lo: int, hi: int) -> TranslationQuiver:
        """Finite restriction to slices ``lo <= p <= hi``.

        The translation is kept where its image stays inside, which
        preserves the mesh axiom on the truncation.
        """
        verts = [(p, i) for p in range(lo, hi + 1) for i in range(1, self.k + 1)]
        vset = set(verts)
        arrows = [
            (v, w) for v in verts for w in self.arrows_from(v) if w in vset
        ]
        tau = {v: self.tau(v) for v in verts if self.tau(v) in vset}
        return TranslationQuiver(Quiver(verts, arrows), tau)


def za_arrows_and_tau(k: int) -> ZARule:
    """Rule object for the strip with k rows."""
    return ZARule(k)


def shift(k: int, v: ZAVertex) -> ZAVertex:
    """The shift automorphism on the strip with k rows."""
    return ZARule(k).shift(v)


@dataclass(frozen=True)
class OrbitQuiver:
    """Finite quotient of the strip by tau^-s ∘ [r]."""

    k: int
    g: AutoEq
    quotient: TranslationQuiver

    @property
    def vertex_count(self) -> int:
        return len(self.quotient.vertices)


def _action(rule: ZARule, g: AutoEq):
    def act(v: ZAVertex) -> ZAVertex:
        for _ in range(g.r):
            v = rule.shift(v)
        for _ in range(g.s):
            v = rule.tau_inv(v)
        return v

    def act_inv(v: ZAVertex) -> ZAVertex:
        for _ in range(g.s):
            v = rule.tau(v)
        for _ in range(g.r):
            v = rule.shift_inv(v)
        return v

    return act, act_inv


def orbit_quiver(k: int, s: int, r: int) -> OrbitQuiver:
    """Quotient of the k-row strip by tau^-s ∘ [r].

    Vertices are labeled by canonical orbit representatives ``(p, i)``
    with ``p >= 0`` minimal along the orbit; arrows and the translation
    are induced from the strip.  Raises :class:`NonFreeActionError` if
    the automorphism fixes a vertex (impossible for non-negative s, r,
    but checked).
    """
    rule = ZARule(k)
    g = AutoEq(s, r)
    act, act_inv = _action(rule, g)

    # The action must move every row strictly forward in p; this is what
    # makes it free and gives each orbit a unique canonical representative.
    for i in range(1, k + 1):
        if act((0, i))[0] <= 0:
            raise NonFreeActionError(
                f"tau^-{s} ∘ [{r}] does not move row {i} strictly forward"
            )

    reps: list[ZAVertex] = []
    for i in range(1, k + 1):
        p = 0
        while act_inv((p, i))[0] < 0:
            reps.append((p, i))
            p += 1
    rep_set = set(reps)

    def normalize(v: ZAVertex) -> ZAVertex:
        while v[0] < 0:
            v = act(v)
        while True:
            w = act_inv(v)
            if w[0] < 0:
                return v
            v = w

    arrows = []
    tau = {}
    for c in sorted(reps, key=vertex_key):
        for t in rule.arrows_from(c):
            arrows.append((c, normalize(t)))
        tau[c] = normalize(rule.tau(c))

    quotient = TranslationQuiver(Quiver(rep_set, arrows), tau)
    return OrbitQuiver(k=k, g=g, quotient=quotient)


@dataclass(frozen=True)
class ComponentMatch:
    """A non-principal power component and its orbit-quiver matches."""

    size: int
    vertices: tuple
    match: tuple[int, int, int] | None  # lexicographically least (k, s, r)
    all_matches: tuple[tuple[int, int, int], ...]
    non_free: bool = False


@dataclass(frozen=True)
class ComponentReport:
    """Outcome of decomposing power(gamma(n*m,1), m) and matching components."""

    n: int
    m: int
    principal_size: int
    principal_is_gamma: bool
    others: tuple[ComponentMatch, ...]
    predicted: tuple[int, int] | None  # odd m: (r, s) from the closed formula
    agrees: bool | str  # True/False for odd m, "n/a" otherwise

    def to_json_dict(self) -> dict:
        observed = [
            {"k": c.match[0], "s": c.match[1], "r": c.match[2]}
            for c in self.others
            if c.match is not None
        ]
        if self.predicted is not None:
            pred_r, pred_s = self.predicted
            ducrest = {
                "predicted": {"r": pred_r, "s": pred_s},
                "observed": observed,
                "agrees": self.agrees,
            }
        else:
            ducrest = {"predicted": None, "observed": observed, "agrees": "n/a"}
        payload = {
            "schema": "quiverkit/1",
            "n": self.n,
            "m": self.m,
            "principal": {
                "size": self.principal_size,
                "iso_gamma": self.principal_is_gamma,
            },
            "others": [
                {
                    "size": c.size,
                    "match": (
                        None
                        if c.match is None
                        else {"k": c.match[0], "s": c.match[1], "r": c.match[2]}
                    ),
                }
                for c in self.others
            ],
            "ducrest_odd_m": ducrest,
        }
        if self.m % 2 == 0:
            lo = self.m // 2
            rs = sorted({c.match[2] for c in self.others if c.match is not None})
            payload["even_m"] = {
                "bound": {"lo": lo, "hi": self.m},
                "observed_r": rs,
                "within_bound": all(lo <= r <= self.m for r in rs),
                "note": "the principal component itself realizes r = m (with s = 1)",
            }
        return payload


def _match_component(
    comp: TranslationQuiver, n: int, m: int, cap: int
) -> ComponentMatch:
    """Search (k, s, r) with orbit_quiver(k, s, r) isomorphic to ``comp``.

    k ranges over 1..n*m-1 and r over 1..m; for fixed (k, r) the quotient
    size grows strictly with s, so s is scanned until the sizes pass the
    component size.  All size-matching triples are iso-tested.
    """
    size = len(comp.vertices)
    matches: list[tuple[int, int, int]] = []
    non_free = False
    for k in range(1, n * m):
        for r in range(1, m + 1):
            s = 0
            while True:
                try:
                    oq = orbit_quiver(k, s, r)
                except NonFreeActionError:
                    non_free = True
                    break
                if oq.vertex_count > size:
                    break
                if oq.vertex_count == size:
                    if iso_translation_quivers(comp, oq.quotient, cap=cap):
                        matches.append((k, s, r))
                s += 1
    matches.sort()
    return ComponentMatch(
        size=size,
        vertices=tuple(sorted(comp.vertices, key=vertex_key)),
        match=matches[0] if matches else None,
        all_matches=tuple(matches),
        non_free=non_free and not matches,
    )


def classify_components(n: int, m: int, cap: int | None = None) -> ComponentReport:
    """Decompose the m-th power of the diagonal quiver and tag each component.

    The component through (1, m+2) is verified against gamma(n, m); every
    other component is matched to orbit quotients by exhaustive (k, s, r)
    search.  For odd m the report compares the observed parameters with
    the closed formula r = (m-1)/2, s = (m-1)(n-1)/2 + 1 without
    asserting it.
    """
    if n < 2 or m < 1:
        raise ValueError(f"need n >= 2 and m >= 1, got n={n}, m={m}")
    cap_val = default_vertex_cap() if cap is None else cap
    N = n * m + 2
    base_size = N * (N - 3) // 2
    if base_size > cap_val:
        raise SizeCapError(
            f"classification capped at {cap_val} vertices "
            f"(gamma({n * m},1) has {base_size})"
        )

    comps = decompose(power(gamma(n * m, 1), m))
    seed = (1, m + 2)
    principal = next(c for c in comps if seed in c.vertices)
    principal_ok = (
        iso_translation_quivers(principal, gamma(n, m), cap=cap_val) is not None
    )

    others = tuple(
        _match_component(c, n, m, cap_val) for c in comps if seed not in c.vertices
    )

    if m % 2 == 1:
        pred_r = (m - 1) // 2
        pred_s = ((m - 1) * (n - 1)) // 2 + 1
        predicted = (pred_r, pred_s)
        agrees: bool | str = all(
            any(s == pred_s and r == pred_r for (_, s, r) in c.all_matches)
            for c in others
        )
    else:
        predicted = None
        agrees = "n/a"

    return ComponentReport(
        n=n,
        m=m,
        principal_size=len(principal.vertices),
        principal_is_gamma=principal_ok,
        others=others,
        predicted=predicted,
        agrees=agrees,
    )
