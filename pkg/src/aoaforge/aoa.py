"""AoN -> AoA conversion.

The pipeline is::

    build_aon -> eliminate_z -> partition_bipartites -> build_aoa

``eliminate_z`` reroutes every Z bar through a dummy node.  Bars that can
share a dummy without creating a new Z are grouped: bars into a common head
whose tails have identical successor sets, and bars out of a common tail
whose heads have identical predecessor sets.  Each complete bipartite of the
resulting Z-free graph becomes one event; every node (real or dummy) becomes
the arc from the event where its predecessors end to the event where its
successors start.
"""

from __future__ import annotations

import heapq
import json
from collections import defaultdict
from dataclasses import asdict, dataclass, field, replace
from typing import Iterable

from .errors import InvariantViolation, NotALineGraphError, UnknownNodeError
from .graph import (
    Activity,
    AonDag,
    NodeKind,
    reachability_masks,
    require_valid,
    topological_levels,
    topological_order,
)
from .linegraph import (
    CompleteBipartite,
    check_partition,
    find_delta_configurations,
    first_z,
    line_graph,
    partition_bipartites,
    z_bars,
)
from .schedule import ScheduleTable, build_aon

TAIL_GROUP = "tail_group"
HEAD_GROUP = "head_group"
SINGLETON = "singleton"
FALLBACK = "canonical_fallback"


@dataclass(frozen=True)
class DummyRecord:
    id: str
    replaced_bars: tuple[tuple[str, str], ...]
    grouping: str

    @property
    def tails(self) -> list[str]:
        return sorted({u for u, _ in self.replaced_bars})

    @property
    def heads(self) -> list[str]:
        return sorted({v for _, v in self.replaced_bars})


@dataclass
class Elimination:
    """Result of :func:`eliminate_z`; unpacks as ``(graph, dummies)``."""

    graph: AonDag
    dummies: list[DummyRecord]
    iterations: int = 0
    fallback: bool = False
    bars_seen: int = 0

    def __iter__(self):
        return iter((self.graph, self.dummies))


def _dummy_names(g: AonDag):
    k = 0
    while True:
        k += 1
        name = f"f_{k}"
        if name not in g:
            yield name


def _group_bars(g: AonDag, bars: list[tuple[str, str]]) -> list[tuple[str, list[tuple[str, str]]]]:
    """Split one round of bars into (grouping, bars) lists, in materialisation order."""
    remaining = set(bars)
    groups: list[tuple[str, list[tuple[str, str]]]] = []

    by_head: dict[str, list[tuple[str, str]]] = defaultdict(list)
    for bar in bars:
        by_head[bar[1]].append(bar)
    for head in sorted(by_head):
        classes: dict[frozenset, list] = defaultdict(list)
        for bar in by_head[head]:
            classes[g.successors(bar[0])].append(bar)
        for members in classes.values():
            if len(members) > 1:
                groups.append((HEAD_GROUP, sorted(members)))
                remaining.difference_update(members)

    by_tail: dict[str, list[tuple[str, str]]] = defaultdict(list)
    for bar in sorted(remaining):
        by_tail[bar[0]].append(bar)
    for tail in sorted(by_tail):
        classes = defaultdict(list)
        for bar in by_tail[tail]:
            classes[g.predecessors(bar[1])].append(bar)
        for members in classes.values():
            if len(members) > 1:
                groups.append((TAIL_GROUP, sorted(members)))
                remaining.difference_update(members)

    groups.extend((SINGLETON, [bar]) for bar in sorted(remaining))

    levels = topological_levels(g)
    groups.sort(key=lambda item: (min(levels[v] for _, v in item[1]), item[1][0]))
    return groups


def _reroute(g: AonDag, plan: list[tuple[str, list[tuple[str, str]]]], names, records: list[DummyRecord]) -> AonDag:
    arcs = set(g.arcs)
    extra = []
    for grouping, bars in plan:
        name = next(names)
        arcs.difference_update(bars)
        arcs.update((u, name) for u in {u for u, _ in bars})
        arcs.update((name, v) for v in {v for _, v in bars})
        extra.append(Activity(name, NodeKind.DUMMY, 0))
        records.append(DummyRecord(name, tuple(sorted(bars)), grouping))
    return g.with_arcs(sorted(arcs), extra)


def _canonical(g: AonDag, names, records: list[DummyRecord]) -> AonDag:
    # an arc needs a dummy only when its tail fans out and its head fans in;
    # after splitting all such arcs no node with two successors shares one
    plan = [
        (FALLBACK, [(u, v)])
        for u, v in g.arcs
        if len(g.successors(u)) > 1 and len(g.predecessors(v)) > 1
    ]
    return _reroute(g, plan, names, records)


def eliminate_z(g: AonDag, max_iterations: int | None = None) -> Elimination:
    """Make ``g`` Z-free by inserting dummy nodes, preserving precedence.

    Rounds of grouped rerouting repeat until no bar is left.  If that takes
    more than ``max_iterations`` rounds (default: the node count) the work is
    discarded and every arc of the input whose tail has several successors
    and whose head has several predecessors gets its own dummy instead.
    """
    cap = len(g) if max_iterations is None else max_iterations
    names = _dummy_names(g)
    records: list[DummyRecord] = []
    current = g
    iterations = 0
    seen = 0
    while True:
        bars = z_bars(current)
        if not bars:
            return Elimination(current, records, iterations, False, seen)
        if iterations >= cap:
            break
        seen += len(bars)
        current = _reroute(current, _group_bars(current, bars), names, records)
        iterations += 1

    records = []
    names = _dummy_names(g)
    result = _canonical(g, names, records)
    if first_z(result) is not None:
        raise InvariantViolation("canonical dummy construction left a Z configuration")
    return Elimination(result, records, iterations, True, seen)


# -- AoA network -----------------------------------------------------------


@dataclass(frozen=True)
class AoaEvent:
    id: int
    origin: str  # "source", "sink" or "bipartite"
    part: int | None = None

    def to_dict(self) -> dict:
        out = {"id": self.id, "origin": self.origin}
        if self.part is not None:
            out["part"] = self.part
        return out


@dataclass(frozen=True)
class AoaArc:
    label: str
    tail: int
    head: int
    kind: str  # "real" or "dummy"
    duration: int = 0


@dataclass(frozen=True)
class AoaDag:
    events: tuple[AoaEvent, ...]
    arcs: tuple[AoaArc, ...]

    @property
    def source(self) -> int:
        return next(e.id for e in self.events if e.origin == "source")

    @property
    def sink(self) -> int:
        return next(e.id for e in self.events if e.origin == "sink")

    def arc(self, label: str) -> AoaArc:
        for a in self.arcs:
            if a.label == label:
                return a
        raise UnknownNodeError(label)

    def labels(self) -> list[str]:
        return [a.label for a in self.arcs]

    def dummy_arcs(self) -> list[AoaArc]:
        return [a for a in self.arcs if a.kind == "dummy"]

    def real_arcs(self) -> list[AoaArc]:
        return [a for a in self.arcs if a.kind == "real"]

    def out_arcs(self) -> dict[int, list[AoaArc]]:
        out: dict[int, list[AoaArc]] = {e.id: [] for e in self.events}
        for a in self.arcs:
            out[a.tail].append(a)
        return out

    def in_arcs(self) -> dict[int, list[AoaArc]]:
        out: dict[int, list[AoaArc]] = {e.id: [] for e in self.events}
        for a in self.arcs:
            out[a.head].append(a)
        return out

    def without_arc(self, label: str) -> "AoaDag":
        return replace(self, arcs=tuple(a for a in self.arcs if a.label != label))

    def with_arc(self, arc: AoaArc) -> "AoaDag":
        arcs = [a for a in self.arcs if a.label != arc.label] + [arc]
        return replace(self, arcs=tuple(sorted(arcs, key=lambda a: a.label)))


def event_order(events: Iterable[int], arcs: Iterable[tuple[int, int]], key) -> list[int]:
    """Topological order of event ids, ties broken by ``key``."""
    events = list(events)
    succ = defaultdict(list)
    indeg = dict.fromkeys(events, 0)
    for t, h in arcs:
        succ[t].append(h)
        indeg[h] += 1
    heap = [(key(e), e) for e in events if indeg[e] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        _, e = heapq.heappop(heap)
        order.append(e)
        for h in succ[e]:
            indeg[h] -= 1
            if indeg[h] == 0:
                heapq.heappush(heap, (key(h), h))
    if len(order) != len(events):
        raise InvariantViolation("AoA event graph has a cycle")
    return order


def build_aoa(g: AonDag, parts: list[CompleteBipartite] | None = None) -> AoaDag:
    """Expand each complete bipartite of a Z-free ``g`` into one event.

    Node ``v`` becomes the arc from the event of the part holding ``v`` in
    its Y-side (the global source if ``v`` has no predecessors) to the event
    of the part holding ``v`` in its X-side (the global sink if ``v`` has no
    successors).  Events are numbered 1.. in topological order.
    """
    if parts is None:
        parts = partition_bipartites(g)
    n = len(parts)
    source, sink = -1, n  # provisional keys
    tail_of: dict[str, int] = {}
    head_of: dict[str, int] = {}
    for i, p in enumerate(parts):
        for y in p.Y:
            if y in tail_of:
                raise InvariantViolation(f"{y!r} lies in the head side of two parts")
            tail_of[y] = i
        for x in p.X:
            if x in head_of:
                raise InvariantViolation(f"{x!r} lies in the tail side of two parts")
            head_of[x] = i
    raw = []
    for v in g.nodes:
        has_pred = bool(g.predecessors(v))
        has_succ = bool(g.successors(v))
        if has_pred != (v in tail_of) or has_succ != (v in head_of):
            raise InvariantViolation(f"partition does not match the arcs around {v!r}")
        raw.append((v, tail_of.get(v, source), head_of.get(v, sink)))

    keys = [source, *range(n), sink]
    order = event_order(keys, [(t, h) for _, t, h in raw], key=lambda k: k)
    ids = {k: i + 1 for i, k in enumerate(order)}
    events = []
    for k in order:
        if k == source:
            events.append(AoaEvent(ids[k], "source"))
        elif k == sink:
            events.append(AoaEvent(ids[k], "sink"))
        else:
            events.append(AoaEvent(ids[k], "bipartite", k + 1))
    arcs = []
    for v, t, h in raw:
        kind = "dummy" if g.kind(v) is NodeKind.DUMMY else "real"
        arcs.append(AoaArc(v, ids[t], ids[h], kind, 0 if kind == "dummy" else g.duration(v)))
    arcs.sort(key=lambda a: a.label)
    return AoaDag(tuple(events), tuple(arcs))


# -- certification -----------------------------------------------------------


@dataclass(frozen=True)
class EquivalenceReport:
    missing: frozenset[tuple[str, str]] = frozenset()
    spurious: frozenset[tuple[str, str]] = frozenset()

    @property
    def ok(self) -> bool:
        return not self.missing and not self.spurious

    def __bool__(self):
        return self.ok

    def summary(self, limit: int = 5) -> str:
        if self.ok:
            return "precedence relation preserved"
        bits = []
        if self.missing:
            bits.append(f"{len(self.missing)} missing, e.g. {sorted(self.missing)[:limit]}")
        if self.spurious:
            bits.append(f"{len(self.spurious)} spurious, e.g. {sorted(self.spurious)[:limit]}")
        return "; ".join(bits)


def _pairs_from_masks(order: list[str], rows: dict[str, int]) -> set[tuple[str, str]]:
    pairs = set()
    for u, mask in rows.items():
        while mask:
            low = mask & -mask
            pairs.add((u, order[low.bit_length() - 1]))
            mask ^= low
    return pairs


def verify_equivalence(aon: AonDag, aoa: AoaDag) -> EquivalenceReport:
    """Compare the AoN precedence closure with AoA reachability.

    Only non-dummy activities of ``aon`` are compared.  In the AoA, ``u``
    precedes ``v`` when the head event of ``u`` reaches (or equals) the tail
    event of ``v``.
    """
    reals = list(aon.real_nodes())
    by_label = {a.label: a for a in aoa.arcs}
    absent = [c for c in reals if c not in by_label]
    if absent:
        raise UnknownNodeError(absent[0])

    order = topological_order(aon)
    index, reach = reachability_masks(aon, order)
    pos = {c: i for i, c in enumerate(reals)}
    aon_rows = {}
    for u in reals:
        mask = reach[u]
        row = 0
        while mask:
            low = mask & -mask
            code = order[low.bit_length() - 1]
            if code in pos:
                row |= 1 << pos[code]
            mask ^= low
        aon_rows[u] = row

    # starts[e]: activities whose tail event is reachable from e (inclusive)
    succ = defaultdict(set)
    for a in aoa.arcs:
        succ[a.tail].add(a.head)
    ev_ids = [e.id for e in aoa.events]
    ev_order = event_order(ev_ids, [(a.tail, a.head) for a in aoa.arcs], key=lambda k: k)
    starts = defaultdict(int)
    for c in reals:
        starts[by_label[c].tail] |= 1 << pos[c]
    for e in reversed(ev_order):
        mask = starts[e]
        for h in succ[e]:
            mask |= starts[h]
        starts[e] = mask
    aoa_rows = {u: starts[by_label[u].head] for u in reals}

    missing = {u: aon_rows[u] & ~aoa_rows[u] for u in reals}
    spurious = {u: aoa_rows[u] & ~aon_rows[u] for u in reals}
    return EquivalenceReport(
        frozenset(_pairs_from_masks(reals, missing)),
        frozenset(_pairs_from_masks(reals, spurious)),
    )


def aoa_line_graph(aoa: AoaDag) -> AonDag:
    """Line digraph of the AoA, nodes named by arc label."""
    into = aoa.in_arcs()
    out = aoa.out_arcs()
    arcs = [(a.label, b.label) for e in into for a in into[e] for b in out[e]]
    return AonDag([Activity(a.label) for a in aoa.arcs], arcs)


def line_graph_roundtrip_check(g: AonDag, aoa: AoaDag) -> bool:
    """True iff the line digraph of ``aoa`` is exactly ``g`` (nodes and arcs)."""
    lg = aoa_line_graph(aoa)
    return set(lg.nodes) == set(g.nodes) and lg.arcs == g.arcs and len(lg.raw_arcs) == len(g.arcs)


# -- end to end ----------------------------------------------------------------


@dataclass(frozen=True)
class NetworkStats:
    event_count: int
    real_arc_count: int
    dummy_arc_count: int
    bipartite_count: int
    z_bar_count: int
    iterations: int
    fallback: bool = False

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class Conversion:
    """Everything one conversion produced; unpacks as ``(aoa, dummies, stats)``."""

    aoa: AoaDag
    dummies: tuple[DummyRecord, ...]
    stats: NetworkStats
    aon: AonDag = field(repr=False)
    eliminated: AonDag = field(repr=False)
    parts: tuple[CompleteBipartite, ...] = field(repr=False, default=())

    def __iter__(self):
        return iter((self.aoa, list(self.dummies), self.stats))


def convert_aon(aon: AonDag, max_iterations: int | None = None) -> Conversion:
    """Convert an AoN dag; the result is always checked by the equivalence oracle."""
    bars = z_bars(aon)
    elim = eliminate_z(aon, max_iterations)
    try:
        parts = partition_bipartites(elim.graph)
    except NotALineGraphError as exc:
        raise InvariantViolation(f"Z elimination left {exc.witness}") from exc
    aoa = build_aoa(elim.graph, parts)
    report = verify_equivalence(aon, aoa)
    if not report.ok:
        raise InvariantViolation("equivalence oracle failed: " + report.summary())
    stats = NetworkStats(
        event_count=len(aoa.events),
        real_arc_count=len(aoa.real_arcs()),
        dummy_arc_count=len(aoa.dummy_arcs()),
        bipartite_count=len(parts),
        z_bar_count=len(bars),
        iterations=elim.iterations,
        fallback=elim.fallback,
    )
    return Conversion(aoa, tuple(elim.dummies), stats, aon, elim.graph, tuple(parts))


def convert(table: ScheduleTable, augment: str = "auto", max_iterations: int | None = None) -> Conversion:
    """Schedule table to certified AoA network."""
    return convert_aon(build_aon(table, augment), max_iterations)


def aoa_to_dict(aoa: AoaDag, stats: NetworkStats | None = None, dummies=None) -> dict:
    out = {
        "events": [e.to_dict() for e in sorted(aoa.events, key=lambda e: e.id)],
        "arcs": [
            {"label": a.label, "tail": a.tail, "head": a.head, "kind": a.kind, "duration": a.duration}
            for a in sorted(aoa.arcs, key=lambda a: a.label)
        ],
    }
    if dummies is not None:
        out["dummies"] = [
            {"id": d.id, "grouping": d.grouping, "replaced_bars": [list(b) for b in d.replaced_bars]}
            for d in dummies
        ]
    if stats is not None:
        out["stats"] = stats.to_dict()
    return out


def aoa_to_json(aoa: AoaDag, stats: NetworkStats | None = None, dummies=None, **extra) -> str:
    doc = aoa_to_dict(aoa, stats, dummies)
    doc.update(extra)
    return json.dumps(doc, ensure_ascii=False, indent=2) + "\n"


def audit(conv: Conversion) -> list[str]:
    """Structural checks on a conversion; returns a list of problems."""
    problems = []
    g = conv.eliminated
    if first_z(g) is not None:
        problems.append(f"eliminated graph has Z {first_z(g)}")
    if find_delta_configurations(g):
        problems.append("eliminated graph has a Δ configuration")
    problems.extend(check_partition(g, list(conv.parts)))
    if not line_graph_roundtrip_check(g, conv.aoa):
        problems.append("line graph of the AoA differs from the eliminated AoN")
    report = verify_equivalence(conv.aon, conv.aoa)
    if not report.ok:
        problems.append(report.summary())
    return problems


__all__ = [
    "AoaArc",
    "AoaDag",
    "AoaEvent",
    "Conversion",
    "DummyRecord",
    "Elimination",
    "EquivalenceReport",
    "NetworkStats",
    "aoa_line_graph",
    "aoa_to_dict",
    "aoa_to_json",
    "audit",
    "build_aoa",
    "convert",
    "convert_aon",
    "eliminate_z",
    "line_graph",
    "line_graph_roundtrip_check",
    "require_valid",
    "verify_equivalence",
]
