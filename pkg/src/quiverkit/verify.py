"""Named end-to-end checks over the whole package.

Each check re-derives a hand-checkable fixture or sweeps a family of
instances.  ``run_checks`` executes them (optionally on a thread pool;
every operation is pure so results are schedule-independent) and the
command line prints one pass/fail line per check.  Hard checks gate the
exit code; the classification check reports hypotheses about power
components and never gates.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .iso import iso_translation_quivers
from .mutation import (
    ExchangeMatrix,
    LaurentFraction,
    a_path_matrix,
    counting_check,
    enumerate_cluster_variables,
    initial_seed,
    mutate_matrix,
    mutate_seed,
)
from .orbit import classify_components, orbit_quiver
from .polygon import enumerate_angulations, gamma, row_of
from .power import decompose, power, principal_component
from .quiver import validate_translation_quiver

# The diagonal quiver of the hexagon, frozen from the drawn picture:
# 9 diagonals, 12 arrows, translation (i,j) -> (i-1,j-1).
HEXAGON_VERTICES = frozenset(
    [(1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (2, 6), (3, 5), (3, 6), (4, 6)]
)
HEXAGON_ARROWS = frozenset(
    [
        ((1, 3), (1, 4)),
        ((1, 4), (1, 5)),
        ((1, 4), (2, 4)),
        ((1, 5), (2, 5)),
        ((2, 4), (2, 5)),
        ((2, 5), (2, 6)),
        ((2, 5), (3, 5)),
        ((2, 6), (3, 6)),
        ((3, 5), (3, 6)),
        ((3, 6), (1, 3)),
        ((3, 6), (4, 6)),
        ((4, 6), (1, 4)),
    ]
)
HEXAGON_TAU = {
    (1, 3): (2, 6),
    (1, 4): (3, 6),
    (1, 5): (4, 6),
    (2, 4): (1, 3),
    (2, 5): (1, 4),
    (2, 6): (1, 5),
    (3, 5): (2, 4),
    (3, 6): (2, 5),
    (4, 6): (3, 5),
}

OCTAGON_VERTICES = frozenset(
    [(1, 4), (3, 6), (5, 8), (2, 7), (1, 6), (3, 8), (2, 5), (4, 7)]
)

CATALAN = {2: 2, 3: 5, 4: 14, 5: 42, 6: 132}


def check_hexagon_quiver() -> tuple[bool, str]:
    tq = gamma(4, 1)
    ok = (
        tq.vertices == HEXAGON_VERTICES
        and frozenset(tq.arrows) == HEXAGON_ARROWS
        and len(tq.arrows) == len(HEXAGON_ARROWS)
        and dict(tq.tau) == {v: HEXAGON_TAU[v] for v in HEXAGON_TAU}
        and tq.quiver.arrow_count((1, 3), (1, 4)) == 1
        and tq.quiver.arrow_count((1, 4), (1, 5)) == 1
        and tq.quiver.arrow_count((1, 5), (2, 5)) == 1
        and tq.tau_of((2, 4)) == (1, 3)
        and tq.tau_of((2, 6)) == (1, 5)
    )
    res = validate_translation_quiver(tq)
    ok = ok and res.ok and res.stable
    return ok, f"{len(tq.vertices)} vertices, {len(tq.arrows)} arrows, exact match"


def check_octagon_vertices() -> tuple[bool, str]:
    tq = gamma(3, 2)
    ok = tq.vertices == OCTAGON_VERTICES
    return ok, f"vertex set of gamma(3,2) = {sorted(tq.vertices)}"


def check_octagon_power_components() -> tuple[bool, str]:
    comps = decompose(power(gamma(6, 1), 2))
    sizes = [len(c.vertices) for c in comps]
    ok = sizes == [8, 6, 6]
    if ok:
        big = comps[0]
        ok = (1, 4) in big.vertices
        ok = ok and iso_translation_quivers(big, gamma(3, 2)) is not None
        reference = orbit_quiver(3, 0, 1).quotient
        for small in comps[1:]:
            ok = ok and iso_translation_quivers(small, reference) is not None
    return ok, f"component sizes {sizes}; (1,4)-component is gamma(3,2)"


def _theorem_pairs(max_ngon: int = 14) -> list[tuple[int, int]]:
    pairs = []
    for m in range(1, max_ngon - 1):
        for n in range(2, max_ngon):
            if n * m + 2 <= max_ngon:
                pairs.append((n, m))
    return sorted(pairs)


def check_power_theorem_sweep() -> tuple[bool, str]:
    pairs = _theorem_pairs()
    for n, m in pairs:
        try:
            principal_component(n, m, check=True)
        except AssertionError as exc:
            return False, f"failed at (n,m)=({n},{m}): {exc}"
    return True, f"{len(pairs)} pairs (n,m) with n*m+2 <= 14, all isomorphic"


def check_power_stability_sweep() -> tuple[bool, str]:
    tried = 0
    for n in range(2, 11):
        base = gamma(n, 1)
        for m in range(1, 5):
            res = validate_translation_quiver(power(base, m).result)
            if not (res.ok and res.stable):
                return False, f"power(gamma({n},1),{m}) is not a stable translation quiver"
            tried += 1
    return True, f"{tried} powers validated, all stable"


def check_orbit_model_pinning() -> tuple[bool, str]:
    pairs = [(k, m) for k in range(1, 12) for m in range(1, 13) if (k + 1) * m <= 12]
    for k, m in pairs:
        oq = orbit_quiver(k, 1, m)
        if iso_translation_quivers(oq.quotient, gamma(k + 1, m)) is None:
            return False, f"orbit_quiver({k},1,{m}) is not gamma({k + 1},{m})"
    return True, f"{len(pairs)} quotients match gamma(k+1,m), incl. (3,1,1) and (2,1,2)"


def random_sign_skew_matrix(rng: np.random.Generator, n: int) -> ExchangeMatrix:
    """Random sign-skew-symmetric integer matrix with entries up to 4."""
    m = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.4:
                continue
            a = int(rng.integers(1, 5))
            b = int(rng.integers(1, 5))
            if rng.random() < 0.5:
                m[i, j], m[j, i] = a, -b
            else:
                m[i, j], m[j, i] = -a, b
    return ExchangeMatrix(m)


def check_mutation_involution(seed: int = 2024) -> tuple[bool, str]:
    rng = np.random.default_rng(seed)
    for trial in range(200):
        n = int(rng.integers(1, 7))
        M = random_sign_skew_matrix(rng, n)
        for k in range(1, n + 1):
            if mutate_matrix(mutate_matrix(M, k), k) != M:
                return False, f"matrix involution failed at trial {trial}, k={k}"
    for n in range(1, 4):
        s0 = initial_seed(a_path_matrix(n))
        for k in range(1, n + 1):
            once = mutate_seed(s0, k)
            if mutate_seed(once, k) != s0:
                return False, f"seed involution failed for A_{n}, k={k}"
            for k2 in range(1, n + 1):
                deeper = mutate_seed(once, k2)
                if mutate_seed(deeper, k2) != once:
                    return False, f"seed involution failed for A_{n}, path ({k},{k2})"
    return True, "200 random matrices and all A_1..A_3 seeds involutive"


def check_mutation_closure() -> tuple[bool, str]:
    res2 = enumerate_cluster_variables(ExchangeMatrix([[0, 1], [-1, 0]]))
    expected = {
        LaurentFraction.from_expr(e, 2)
        for e in ("u_1", "u_2", "(1+u_2)/u_1", "(1+u_1)/u_2", "(1+u_1+u_2)/(u_1*u_2)")
    }
    ok = res2.variables == frozenset(expected) and not res2.cap_reached
    res3 = enumerate_cluster_variables(a_path_matrix(3))
    ok = ok and len(res3.variables) == 9 and not res3.cap_reached
    laurent = all(x.is_laurent() for x in res2.variables | res3.variables)
    ok = ok and laurent
    return ok, (
        f"A_2 -> {len(res2.variables)} variables, A_3 -> {len(res3.variables)}, "
        f"all Laurent: {laurent}"
    )


def check_counting() -> tuple[bool, str]:
    results = {n: counting_check(n) for n in range(1, 5)}
    return all(results.values()), "variable count equals diagonal count for n in 1..4"


def check_angulations() -> tuple[bool, str]:
    for n in range(2, 7):
        found = enumerate_angulations(n, 1)
        if len(found) != CATALAN[n]:
            return False, f"{len(found)} triangulations of the {n + 2}-gon, expected {CATALAN[n]}"
        if any(len(t) != n - 1 for t in found):
            return False, f"a triangulation of the {n + 2}-gon is not of size {n - 1}"
    quads = enumerate_angulations(3, 2)
    if len(quads) != 12 or any(len(t) != 2 for t in quads):
        return False, f"{len(quads)} quadrangulations of the octagon, expected 12"
    return True, "Catalan counts 2,5,14,42,132 and 12 octagon quadrangulations"


def check_row_property() -> tuple[bool, str]:
    for n, m in ((2, 3), (3, 3)):
        N = n * m + 2
        base = gamma(n * m, 1)
        comps = decompose(power(base, m))
        comp_of = {}
        for idx, comp in enumerate(comps):
            for v in comp.vertices:
                comp_of[v] = idx
        rows: dict[int, set[int]] = {}
        for v in base.vertices:
            rows.setdefault(row_of(v, N), set()).add(comp_of[v])
        bad = {r: c for r, c in rows.items() if len(c) != 1}
        if bad:
            return False, f"(n,m)=({n},{m}): rows split across components: {bad}"
    return True, "each row of gamma(n*m,1) sits in one component for (2,3) and (3,3)"


def check_classification_hypothesis() -> tuple[bool, str]:
    notes = []
    all_matched = True
    for n, m in ((2, 3), (3, 3), (4, 3), (2, 5)):
        report = classify_components(n, m)
        matched = all(c.match is not None for c in report.others)
        all_matched = all_matched and matched and report.principal_is_gamma
        notes.append(
            f"(n,m)=({n},{m}): principal {report.principal_size}"
            f"{'=gamma' if report.principal_is_gamma else '!=gamma'}, others "
            + (
                ", ".join(
                    f"{c.size}->" + ("(k=%d,s=%d,r=%d)" % c.match if c.match else "unmatched")
                    for c in report.others
                )
                or "none"
            )
            + f"; formula agrees: {report.agrees}"
        )
    return all_matched, "; ".join(notes)


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    hard: bool
    detail: str
    seconds: float


_CHECKS: list[tuple[str, bool, Callable[..., tuple[bool, str]]]] = [
    ("hexagon-quiver", True, check_hexagon_quiver),
    ("octagon-vertices", True, check_octagon_vertices),
    ("octagon-power-components", True, check_octagon_power_components),
    ("power-theorem-sweep", True, check_power_theorem_sweep),
    ("power-stability-sweep", True, check_power_stability_sweep),
    ("orbit-model-pinning", True, check_orbit_model_pinning),
    ("mutation-involution", True, check_mutation_involution),
    ("mutation-closure", True, check_mutation_closure),
    ("counting", True, check_counting),
    ("angulations", True, check_angulations),
    ("row-property", True, check_row_property),
    ("classification-hypothesis", False, check_classification_hypothesis),
]


def check_names() -> list[str]:
    return [name for name, _, _ in _CHECKS]


def run_checks(
    only: str | None = None, seed: int = 2024, threads: int = 1
) -> list[CheckResult]:
    """Run the named checks (all, or those whose name contains ``only``).

    With ``threads > 1`` checks run on a thread pool; results keep the
    declaration order either way.
    """
    selected = [
        (name, hard, fn)
        for name, hard, fn in _CHECKS
        if only is None or only in name
    ]

    def run_one(item) -> CheckResult:
        name, hard, fn = item
        t0 = time.perf_counter()
        try:
            if fn is check_mutation_involution:
                ok, detail = fn(seed=seed)
            else:
                ok, detail = fn()
        except Exception as exc:  # a crash is a failure, not an abort
            ok, detail = False, f"raised {type(exc).__name__}: {exc}"
        return CheckResult(name, ok, hard, detail, time.perf_counter() - t0)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(run_one, selected))
    return [run_one(item) for item in selected]
