"""Graphviz DOT output for AoN and AoA graphs.

Output is byte-stable: nodes and edges are emitted in sorted order and every
attribute is written explicitly on each statement.
"""

from __future__ import annotations

from .aoa import AoaDag, event_order
from .graph import AonDag, NodeKind, group_levels, topological_levels


def _q(text) -> str:
    text = str(text).replace("\\", "\\\\").replace('"', '\\"')
    return f'"{text}"'


def _rank_blocks(rows) -> list[str]:
    return [
        "  { rank=same; " + " ".join(_q(n) + ";" for n in row) + " }"
        for row in rows
    ]


def aon_to_dot(g: AonDag, name: str = "aon") -> str:
    lines = [f"digraph {_q(name)} {{", "  rankdir=LR;"]
    for code in g.nodes:
        act = g.activity(code)
        style = "dashed" if act.kind is NodeKind.DUMMY else "solid"
        label = code if act.kind is NodeKind.DUMMY else f"{code}({act.duration})"
        lines.append(f"  {_q(code)} [shape=box, style={style}, label={_q(label)}];")
    lines.extend(_rank_blocks(group_levels(topological_levels(g))))
    for u, v in g.arcs:
        lines.append(f"  {_q(u)} -> {_q(v)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def aoa_to_dot(aoa: AoaDag, name: str = "aoa") -> str:
    ids = [e.id for e in aoa.events]
    order = event_order(ids, [(a.tail, a.head) for a in aoa.arcs], key=lambda k: k)
    level = {}
    ins = aoa.in_arcs()
    for e in order:
        level[e] = 1 + max((level[a.tail] for a in ins[e]), default=0)
    rows: dict[int, list[int]] = {}
    for e in sorted(level):
        rows.setdefault(level[e], []).append(e)

    lines = [f"digraph {_q(name)} {{", "  rankdir=LR;"]
    for e in sorted(ids):
        lines.append(f"  {e} [shape=circle, label={_q(e)}];")
    for r in sorted(rows):
        lines.append("  { rank=same; " + " ".join(f"{e};" for e in rows[r]) + " }")
    for a in sorted(aoa.arcs, key=lambda a: (a.tail, a.head, a.label)):
        if a.kind == "dummy":
            lines.append(f"  {a.tail} -> {a.head} [style=dashed, label={_q(a.label)}];")
        else:
            lines.append(f"  {a.tail} -> {a.head} [style=solid, label={_q(f'{a.label}({a.duration})')}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def render_dot(graph, name: str | None = None) -> str:
    """DOT text for an :class:`AonDag` (boxes) or :class:`AoaDag` (circles)."""
    if isinstance(graph, AoaDag):
        return aoa_to_dot(graph, name or "aoa")
    if isinstance(graph, AonDag):
        return aon_to_dot(graph, name or "aon")
    raise TypeError(f"cannot render {type(graph).__name__}")
