"""Line digraphs, Z / Δ configurations and complete-bipartite arc partitions.

A dag is the line digraph of some dag exactly when it has no Z
configuration, i.e. when any two nodes sharing a successor share all of
their successors.  Such a graph's arcs split into complete bipartites
``(X, Y)`` with pairwise disjoint X-sets and Y-sets; each part becomes one
event of the activity-on-arc network.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

from .errors import NotALineGraphError
from .graph import Activity, AonDag, topological_levels

ARROW = "→"


class ZConfiguration(NamedTuple):
    """Arcs a→c, b→c, b→d present and a→d absent; ``(b, c)`` is the bar."""

    a: str
    b: str
    c: str
    d: str

    @property
    def bar(self) -> tuple[str, str]:
        return (self.b, self.c)


class DeltaConfiguration(NamedTuple):
    a: str
    b: str
    c: str


@dataclass(frozen=True)
class CompleteBipartite:
    X: frozenset[str]
    Y: frozenset[str]

    def arcs(self) -> list[tuple[str, str]]:
        return [(x, y) for x in sorted(self.X) for y in sorted(self.Y)]

    def __repr__(self) -> str:
        return f"({{{', '.join(sorted(self.X))}}}, {{{', '.join(sorted(self.Y))}}})"


def line_graph(g: AonDag) -> AonDag:
    """One node ``"tail→head"`` per arc; u→v whenever head(u) == tail(v)."""
    name = {arc: f"{arc[0]}{ARROW}{arc[1]}" for arc in g.arcs}
    arcs = []
    for (u, v), label in name.items():
        for w in sorted(g.successors(v)):
            arcs.append((label, name[(v, w)]))
    return AonDag([Activity(n) for n in name.values()], arcs)


def find_z_configurations(g: AonDag) -> list[ZConfiguration]:
    """Every Z quadruple, sorted.  The list can be large on dense graphs."""
    found = []
    for c in g.nodes:
        preds = sorted(g.predecessors(c))
        for a in preds:
            sa = g.successors(a)
            for b in preds:
                if a == b:
                    continue
                for d in sorted(g.successors(b) - sa):
                    found.append(ZConfiguration(a, b, c, d))
    return sorted(found)


def z_bars(g: AonDag) -> list[tuple[str, str]]:
    """Distinct bars of all Z configurations, sorted.

    ``(b, c)`` is a bar iff some other predecessor ``a`` of ``c`` lacks one
    of ``b``'s successors.
    """
    bars = []
    for c in g.nodes:
        preds = g.predecessors(c)
        if len(preds) < 2:
            continue
        succ = {p: g.successors(p) for p in preds}
        for b in sorted(preds):
            sb = succ[b]
            if any(a != b and not sb <= succ[a] for a in preds):
                bars.append((b, c))
    return sorted(bars)


def first_z(g: AonDag) -> ZConfiguration | None:
    for b, c in z_bars(g):
        sb = g.successors(b)
        for a in sorted(g.predecessors(c)):
            if a != b and not sb <= g.successors(a):
                d = min(sb - g.successors(a))
                return ZConfiguration(a, b, c, d)
    return None


def find_delta_configurations(g: AonDag) -> list[DeltaConfiguration]:
    """All transitive triangles a→b→c with a shortcut a→c."""
    found = []
    for a in g.nodes:
        sa = g.successors(a)
        for b in sorted(sa):
            for c in sorted(g.successors(b) & sa):
                found.append(DeltaConfiguration(a, b, c))
    return found


def is_line_graph(g: AonDag) -> bool:
    return first_z(g) is None


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)


def group_arcs(g: AonDag) -> list[CompleteBipartite]:
    """Classes of the "shares a tail or shares a head" closure, unordered.

    Each class is returned as (its tails, its heads).  Only when ``g`` is
    Z-free is every class guaranteed to be complete.
    """
    uf = _UnionFind()
    for u, v in g.arcs:
        uf.union(("out", u), ("in", v))
    tails: dict = {}
    heads: dict = {}
    for u, v in g.arcs:
        root = uf.find(("out", u))
        tails.setdefault(root, set()).add(u)
        heads.setdefault(root, set()).add(v)
    return [CompleteBipartite(frozenset(tails[r]), frozenset(heads[r])) for r in tails]


def partition_bipartites(g: AonDag) -> list[CompleteBipartite]:
    """Complete-bipartite partition of the arcs of a Z-free dag.

    Parts are ordered by the smallest level among their tails, then by the
    sorted tail and head codes.
    """
    witness = first_z(g)
    if witness is not None:
        raise NotALineGraphError(witness)
    levels = topological_levels(g)
    parts = group_arcs(g)
    parts.sort(key=lambda p: (min(levels[x] for x in p.X), sorted(p.X), sorted(p.Y)))
    return parts


def check_partition(g: AonDag, parts: list[CompleteBipartite]) -> list[str]:
    """Problems with ``parts`` as a partition of ``g``'s arcs (empty if valid)."""
    problems = []
    arcs = set(g.arcs)
    covered: dict[tuple[str, str], int] = {}
    for i, p in enumerate(parts):
        if not p.X or not p.Y:
            problems.append(f"part {i} has an empty side")
        for arc in p.arcs():
            if arc not in arcs:
                problems.append(f"part {i} is not complete: {arc[0]}->{arc[1]} missing")
            covered[arc] = covered.get(arc, 0) + 1
    for arc in sorted(arcs):
        n = covered.get(arc, 0)
        if n != 1:
            problems.append(f"arc {arc[0]}->{arc[1]} covered {n} times")
    for (i, p), (j, q) in combinations(enumerate(parts), 2):
        if p.X & q.X:
            problems.append(f"parts {i} and {j} share tails {sorted(p.X & q.X)}")
        if p.Y & q.Y:
            problems.append(f"parts {i} and {j} share heads {sorted(p.Y & q.Y)}")
    return problems
