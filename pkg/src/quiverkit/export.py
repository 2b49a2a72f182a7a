"""Deterministic DOT and JSON rendering of (translation) quivers."""

from __future__ import annotations

import json

from .quiver import Quiver, TranslationQuiver, arrow_key, vertex_key, vertex_label


def quiver_json_dict(tq: TranslationQuiver | Quiver) -> dict:
    """``{"vertices": [...], "arrows": [[src, tgt], ...], "tau": {...}}``.

    Labels follow the package-wide vertex order, so equal quivers
    serialize to identical bytes.
    """
    if isinstance(tq, Quiver):
        q, tau = tq, {}
    else:
        q, tau = tq.quiver, dict(tq.tau)
    return {
        "vertices": [vertex_label(v) for v in q.sorted_vertices()],
        "arrows": [[vertex_label(s), vertex_label(t)] for s, t in q.arrows],
        "tau": {
            vertex_label(y): vertex_label(tau[y])
            for y in sorted(tau, key=vertex_key)
        },
    }


def to_json(tq: TranslationQuiver | Quiver, **extra) -> str:
    """JSON text with optional extra top-level keys placed first."""
    payload = dict(extra)
    payload.update(quiver_json_dict(tq))
    return json.dumps(payload, indent=2) + "\n"


def to_dot(tq: TranslationQuiver | Quiver, name: str = "quiver") -> str:
    """One digraph; solid arrows, dashed ``tau`` edges from y to tau(y)."""
    if isinstance(tq, Quiver):
        q, tau = tq, {}
    else:
        q, tau = tq.quiver, dict(tq.tau)
    lines = [f"digraph {name} {{"]
    for v in q.sorted_vertices():
        lines.append(f'  "{vertex_label(v)}";')
    for s, t in q.arrows:
        lines.append(f'  "{vertex_label(s)}" -> "{vertex_label(t)}";')
    for y in sorted(tau, key=vertex_key):
        lines.append(
            f'  "{vertex_label(y)}" -> "{vertex_label(tau[y])}"'
            ' [style=dashed, label="tau"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def components_json_dict(parts: list[TranslationQuiver], **extra) -> dict:
    payload = dict(extra)
    payload["components"] = [quiver_json_dict(p) for p in parts]
    return payload


def components_dot(parts: list[TranslationQuiver]) -> str:
    return "".join(to_dot(p, name=f"component_{i}") for i, p in enumerate(parts))
