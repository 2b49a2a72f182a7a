"""Command-line front end.

Subcommands: gamma, power, classify, mutate, angulations, orbit, verify.
Identical inputs produce byte-identical output.  Exit codes: 0 success,
2 usage error, 3 size cap exceeded, 4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import NonFreeActionError, SizeCapError
from .export import components_dot, components_json_dict, quiver_json_dict, to_dot
from .mutation import (
    ExchangeMatrix,
    enumerate_cluster_variables,
    initial_seed,
    mutate_seed,
)
from .orbit import classify_components, orbit_quiver
from .polygon import enumerate_angulations, gamma
from .power import decompose, power
from .verify import run_checks

SCHEMA = "quiverkit/1"


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _dump(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _quiver_payload(tq, **head) -> dict:
    payload = {"schema": SCHEMA, **head}
    payload.update(quiver_json_dict(tq))
    return payload


def _cmd_gamma(args) -> int:
    tq = gamma(args.n, args.m)
    if args.emit == "dot":
        _emit(to_dot(tq, name=f"gamma_{args.n}_{args.m}"), args.out)
    else:
        _emit(_dump(_quiver_payload(tq, n=args.n, m=args.m)), args.out)
    return 0


def _cmd_power(args) -> int:
    pq = power(gamma(args.n, 1), args.m)
    if args.components:
        parts = decompose(pq)
        if args.emit == "dot":
            _emit(components_dot(parts), args.out)
        else:
            payload = components_json_dict(parts, schema=SCHEMA, n=args.n, m=args.m)
            _emit(_dump(payload), args.out)
    else:
        if args.emit == "dot":
            _emit(to_dot(pq.result, name=f"power_{args.n}_{args.m}"), args.out)
        else:
            _emit(_dump(_quiver_payload(pq.result, n=args.n, m=args.m)), args.out)
    return 0


def _cmd_classify(args) -> int:
    report = classify_components(args.n, args.m, cap=args.cap)
    if args.report == "json":
        _emit(_dump(report.to_json_dict()), args.out)
        return 0
    lines = [
        f"power(gamma({args.n * args.m},1), {args.m}):",
        f"  principal component: {report.principal_size} vertices, "
        f"gamma({args.n},{args.m}) match: {report.principal_is_gamma}",
    ]
    for comp in report.others:
        if comp.match is not None:
            k, s, r = comp.match
            tag = f"orbit_quiver(k={k}, s={s}, r={r})"
            if len(comp.all_matches) > 1:
                tag += f" (+{len(comp.all_matches) - 1} more)"
        elif comp.non_free:
            tag = "unmatched (non-free)"
        else:
            tag = "unmatched"
        lines.append(f"  component of {comp.size} vertices: {tag}")
    if report.predicted is not None:
        pred_r, pred_s = report.predicted
        lines.append(
            f"  odd-m formula r={pred_r}, s={pred_s}: agrees = {report.agrees}"
        )
    else:
        lines.append(f"  even m: bound {args.m // 2} <= r <= {args.m}; "
                     "the principal component itself realizes r = m (s = 1)")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_mutate(args) -> int:
    try:
        rows = json.loads(args.matrix)
    except json.JSONDecodeError as exc:
        raise ValueError(f"--matrix is not valid JSON: {exc}") from exc
    M = ExchangeMatrix(rows).validate()
    payload: dict = {"schema": SCHEMA, "matrix": M.rows()}
    if args.enumerate:
        closure = enumerate_cluster_variables(M, cap=args.cap)
        rendered = sorted(x.render() for x in closure.variables)
        payload.update(
            {
                "variables": rendered,
                "count": len(rendered),
                "cap_reached": closure.cap_reached,
            }
        )
    else:
        steps = []
        if args.steps:
            steps = [int(tok) for tok in args.steps.replace(" ", "").split(",") if tok]
        seed = initial_seed(M)
        for k in steps:
            seed = mutate_seed(seed, k)
        payload.update(
            {
                "steps": steps,
                "cluster": [x.render() for x in seed.cluster],
                "matrix_after": seed.matrix.rows(),
            }
        )
    _emit(_dump(payload), args.out)
    return 0


def _cmd_angulations(args) -> int:
    found = enumerate_angulations(args.n, args.m, polygon_cap=args.cap)
    payload = {
        "schema": SCHEMA,
        "n": args.n,
        "m": args.m,
        "count": len(found),
        "angulations": [[[i, j] for i, j in coll] for coll in found],
    }
    _emit(_dump(payload), args.out)
    return 0


def _cmd_orbit(args) -> int:
    oq = orbit_quiver(args.k, args.s, args.r)
    if args.emit == "dot":
        _emit(to_dot(oq.quotient, name=f"orbit_{args.k}_{args.s}_{args.r}"), args.out)
    else:
        _emit(
            _dump(_quiver_payload(oq.quotient, k=args.k, s=args.s, r=args.r)),
            args.out,
        )
    return 0


def _cmd_verify(args) -> int:
    results = run_checks(only=args.only, seed=args.seed, threads=args.threads)
    if not results:
        sys.stderr.write(f"no check matches --only {args.only!r}\n")
        return 2
    lines = []
    for res in results:
        status = "PASS" if res.ok else "FAIL"
        gate = "" if res.hard else " (non-gating)"
        lines.append(f"[{status}] {res.name}{gate} ({res.seconds:.3f}s): {res.detail}")
    hard_ok = all(res.ok for res in results if res.hard)
    lines.append("all hard checks passed" if hard_ok else "hard check failure")
    _emit("\n".join(lines) + "\n", args.out)
    return 0 if hard_ok else 4


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quiverkit",
        description="translation quivers, polygon diagonals, powers, "
        "orbit quotients and cluster mutation",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, emit_default="json"):
        p.add_argument("--emit", choices=("dot", "json"), default=emit_default)
        p.add_argument("--out", default=None, help="output path (default stdout)")

    p = sub.add_parser("gamma", help="diagonal quiver of an (n*m+2)-gon")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=1)
    add_common(p)
    p.set_defaults(fn=_cmd_gamma)

    p = sub.add_parser("power", help="m-th power of gamma(n,1)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--components", action="store_true", help="emit the decomposition")
    add_common(p)
    p.set_defaults(fn=_cmd_power)

    p = sub.add_parser("classify", help="match power components to orbit quotients")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--report", choices=("json", "text"), default="text")
    p.add_argument("--cap", type=int, default=None, help="vertex cap override")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("mutate", help="mutate a seed or enumerate cluster variables")
    p.add_argument("--matrix", required=True, help="JSON rows, e.g. [[0,1],[-1,0]]")
    p.add_argument("--steps", default="", help="1-based directions, e.g. 1,2,1")
    p.add_argument("--enumerate", action="store_true")
    p.add_argument("--cap", type=int, default=10000, help="seed cap for --enumerate")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=_cmd_mutate)

    p = sub.add_parser("angulations", help="maximal non-crossing diagonal collections")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--cap", type=int, default=None, help="polygon size cap override")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=_cmd_angulations)

    p = sub.add_parser("orbit", help="quotient of the k-row strip by tau^-s ∘ [r]")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    add_common(p)
    p.set_defaults(fn=_cmd_orbit)

    p = sub.add_parser("verify", help="run the named acceptance checks")
    p.add_argument("--only", default=None, help="substring filter on check names")
    p.add_argument("--seed", type=int, default=2024)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except SizeCapError as exc:
        sys.stderr.write(f"size cap: {exc}\n")
        return 3
    except (ValueError, IndexError, NonFreeActionError, ZeroDivisionError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
