"""Activity-on-node dag: storage, validation, levels and reachability.

Every set-valued query returns codes in lexicographic order so that anything
built on top of it is deterministic.
"""

from __future__ import annotations

import enum
import heapq
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from .errors import CycleError, GraphValidationError, UnknownNodeError

SOURCE_NAMES = ("α", "START")
SINK_NAMES = ("ω", "END")
RESERVED_CHARS = frozenset(",;")


class NodeKind(str, enum.Enum):
    REAL = "real"
    SOURCE = "source_marker"
    SINK = "sink_marker"
    DUMMY = "dummy"


def kind_for_code(code: str) -> NodeKind:
    if code in SOURCE_NAMES:
        return NodeKind.SOURCE
    if code in SINK_NAMES:
        return NodeKind.SINK
    return NodeKind.REAL


def check_code(code: str) -> str | None:
    """Return a reason string if ``code`` is not a legal activity id."""
    if not code:
        return "empty activity code"
    if any(ch.isspace() for ch in code):
        return f"activity code {code!r} contains whitespace"
    if RESERVED_CHARS.intersection(code):
        return f"activity code {code!r} contains a reserved separator"
    if code == "-":
        return "'-' is reserved for an empty predecessor list"
    return None


@dataclass(frozen=True)
class Activity:
    code: str
    kind: NodeKind = NodeKind.REAL
    duration: int = 0


class AonDag:
    """Immutable node-per-activity precedence graph.

    Construction never raises: duplicate arcs, self-arcs, cycles and
    references to undeclared codes are kept as given and reported by
    :func:`validate_dag`.
    """

    def __init__(self, activities: Iterable[Activity], arcs: Iterable[tuple[str, str]]):
        acts: dict[str, Activity] = {}
        dup_nodes = []
        for a in activities:
            if a.code in acts:
                dup_nodes.append(a.code)
            acts[a.code] = a
        self._activities = acts
        self._duplicate_nodes = tuple(dup_nodes)
        self._raw_arcs = tuple((str(u), str(v)) for u, v in arcs)
        succ: dict[str, set[str]] = defaultdict(set)
        pred: dict[str, set[str]] = defaultdict(set)
        for u, v in self._raw_arcs:
            succ[u].add(v)
            pred[v].add(u)
        self._succ = {k: frozenset(s) for k, s in succ.items()}
        self._pred = {k: frozenset(s) for k, s in pred.items()}
        self._arcs = tuple(sorted(set(self._raw_arcs)))
        self._nodes = tuple(sorted(acts))

    @classmethod
    def from_arcs(
        cls,
        arcs: Iterable[tuple[str, str]],
        nodes: Iterable[str] = (),
        durations: Mapping[str, int] | None = None,
    ) -> "AonDag":
        """Build a graph whose node set is inferred from ``arcs`` (plus ``nodes``).

        Node kinds follow the code: ``α``/``START`` and ``ω``/``END`` are the
        markers and everything else is real.  Use the full constructor for
        dummies.
        """
        arcs = list(arcs)
        codes = dict.fromkeys(nodes)
        for u, v in arcs:
            codes.setdefault(u)
            codes.setdefault(v)
        durations = durations or {}
        acts = [Activity(c, kind_for_code(c), durations.get(c, 0)) for c in codes]
        return cls(acts, arcs)

    # -- basic accessors -------------------------------------------------

    @property
    def nodes(self) -> tuple[str, ...]:
        return self._nodes

    @property
    def arcs(self) -> tuple[tuple[str, str], ...]:
        """Distinct arcs, sorted."""
        return self._arcs

    @property
    def raw_arcs(self) -> tuple[tuple[str, str], ...]:
        return self._raw_arcs

    def activity(self, code: str) -> Activity:
        try:
            return self._activities[code]
        except KeyError:
            raise UnknownNodeError(code) from None

    def activities(self) -> Iterator[Activity]:
        for code in self.nodes:
            yield self._activities[code]

    def kind(self, code: str) -> NodeKind:
        return self.activity(code).kind

    def duration(self, code: str) -> int:
        return self.activity(code).duration

    def __contains__(self, code) -> bool:
        return code in self._activities

    def __len__(self) -> int:
        return len(self._activities)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AonDag):
            return NotImplemented
        return (
            self._activities == other._activities
            and sorted(self._raw_arcs) == sorted(other._raw_arcs)
        )

    def __hash__(self):
        return hash((frozenset(self._activities.values()), self._arcs))

    def __repr__(self) -> str:
        return f"AonDag(nodes={len(self)}, arcs={len(self._arcs)})"

    def successors(self, code: str) -> frozenset[str]:
        return self._succ.get(code, frozenset())

    def predecessors(self, code: str) -> frozenset[str]:
        return self._pred.get(code, frozenset())

    def source(self) -> str | None:
        found = [c for c in self.nodes if self.kind(c) is NodeKind.SOURCE]
        return found[0] if len(found) == 1 else None

    def sink(self) -> str | None:
        found = [c for c in self.nodes if self.kind(c) is NodeKind.SINK]
        return found[0] if len(found) == 1 else None

    def real_nodes(self) -> tuple[str, ...]:
        """All non-dummy nodes, markers included."""
        return tuple(c for c in self.nodes if self.kind(c) is not NodeKind.DUMMY)

    def with_arcs(self, arcs: Iterable[tuple[str, str]], extra: Iterable[Activity] = ()) -> "AonDag":
        return AonDag(list(self._activities.values()) + list(extra), arcs)


def neighbors(g: AonDag, v: str, direction: str = "out") -> list[str]:
    """Sorted successor (``out``) or predecessor (``in``) codes of ``v``."""
    if v not in g:
        raise UnknownNodeError(v)
    if direction == "out":
        return sorted(g.successors(v))
    if direction == "in":
        return sorted(g.predecessors(v))
    raise ValueError(f"direction must be 'in' or 'out', not {direction!r}")


# -- validation ----------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    kind: str
    message: str
    witness: tuple[str, ...] = ()

    def __str__(self) -> str:
        return self.message


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def of_kind(self, kind: str) -> list[Violation]:
        return [v for v in self.violations if v.kind == kind]


def find_cycle(g: AonDag) -> tuple[str, ...] | None:
    """One witness cycle as ``(v0, v1, ..., v0)``, or ``None`` if acyclic.

    Arcs touching undeclared codes are followed too, so a cycle is found even
    in a graph with dangling references.
    """
    white, grey, black = 0, 1, 2
    colour: dict[str, int] = defaultdict(int)
    every = sorted(set(g.nodes) | {x for arc in g.arcs for x in arc})
    for root in every:
        if colour[root] != white:
            continue
        stack = [(root, iter(sorted(g.successors(root))))]
        path = [root]
        colour[root] = grey
        while stack:
            node, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                colour[node] = black
                stack.pop()
                path.pop()
                continue
            if colour[nxt] == grey:
                i = path.index(nxt)
                return tuple(path[i:]) + (nxt,)
            if colour[nxt] == white:
                colour[nxt] = grey
                path.append(nxt)
                stack.append((nxt, iter(sorted(g.successors(nxt)))))
    return None


def validate_dag(g: AonDag, require_terminals: bool = True) -> ValidationReport:
    """Check acyclicity and well-formedness.

    With ``require_terminals`` (the default) the graph must also have exactly
    one source marker and one sink marker, and every other node must have
    both a predecessor and a successor.
    """
    out: list[Violation] = []
    for code in g._duplicate_nodes:
        out.append(Violation("duplicate_node", f"activity {code!r} declared twice", (code,)))
    for code in g.nodes:
        reason = check_code(code)
        if reason:
            out.append(Violation("bad_code", reason, (code,)))
    seen = set()
    for arc in g.raw_arcs:
        u, v = arc
        if u == v:
            out.append(Violation("self_arc", f"self-arc on {u!r}", arc))
        elif arc in seen:
            out.append(Violation("duplicate_arc", f"duplicate arc {u}->{v}", arc))
        seen.add(arc)
        for end in arc:
            if end not in g:
                out.append(
                    Violation("unknown_node", f"arc {u}->{v} references unknown activity {end!r}", (end,))
                )
    cycle = find_cycle(g)
    if cycle is not None and len(cycle) > 2:
        out.append(Violation("cycle", "cycle " + "->".join(cycle), cycle))
    if require_terminals:
        for kind, label in ((NodeKind.SOURCE, "source (α)"), (NodeKind.SINK, "sink (ω)")):
            found = [c for c in g.nodes if g.kind(c) is kind]
            if len(found) != 1:
                out.append(
                    Violation("terminals", f"expected exactly one {label} node, found {len(found)}", tuple(found))
                )
        for code in g.nodes:
            kind = g.kind(code)
            if kind is not NodeKind.SOURCE and not g.predecessors(code):
                out.append(Violation("disconnected", f"{code!r} has no predecessor", (code,)))
            if kind is not NodeKind.SINK and not g.successors(code):
                out.append(Violation("disconnected", f"{code!r} has no successor", (code,)))
    return ValidationReport(tuple(out))


def require_valid(g: AonDag, require_terminals: bool = True) -> AonDag:
    report = validate_dag(g, require_terminals)
    if not report.ok:
        if report.of_kind("cycle"):
            raise CycleError(report)
        raise GraphValidationError(report)
    return g


# -- order and reachability ----------------------------------------------


def topological_order(g: AonDag) -> list[str]:
    """Kahn's algorithm, smallest available code first."""
    indeg = {c: sum(1 for p in g.predecessors(c) if p in g) for c in g.nodes}
    heap = [c for c, d in indeg.items() if d == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        c = heapq.heappop(heap)
        order.append(c)
        for s in g.successors(c):
            if s in indeg:
                indeg[s] -= 1
                if indeg[s] == 0:
                    heapq.heappush(heap, s)
    if len(order) != len(indeg):
        cycle = find_cycle(g)
        raise CycleError(ValidationReport((Violation("cycle", "cycle " + "->".join(cycle or ()), cycle or ()),)))
    return order


def topological_levels(g: AonDag) -> dict[str, int]:
    """Longest-path level of every node; predecessor-free nodes sit at level 1."""
    level: dict[str, int] = {}
    for c in topological_order(g):
        preds = [level[p] for p in g.predecessors(c) if p in level]
        level[c] = 1 + max(preds, default=0)
    return dict(sorted(level.items()))


def group_levels(levels: Mapping[str, int]) -> list[list[str]]:
    """``levels`` as a list of sorted code lists, index 0 holding level 1."""
    if not levels:
        return []
    rows: list[list[str]] = [[] for _ in range(max(levels.values()))]
    for code in sorted(levels):
        rows[levels[code] - 1].append(code)
    return rows


def reachability_masks(g: AonDag, order: list[str] | None = None) -> tuple[dict[str, int], dict[str, int]]:
    """Bitset descendants per node.

    Returns ``(index, reach)`` where bit ``index[v]`` of ``reach[u]`` is set
    iff there is a path of length >= 1 from ``u`` to ``v``.
    """
    order = order if order is not None else topological_order(g)
    index = {c: i for i, c in enumerate(order)}
    reach: dict[str, int] = {}
    for c in reversed(order):
        mask = 0
        for s in g.successors(c):
            if s in index:
                mask |= (1 << index[s]) | reach[s]
        reach[c] = mask
    return index, reach


def transitive_closure(g: AonDag) -> frozenset[tuple[str, str]]:
    """All pairs ``(u, v)`` joined by a directed path of length >= 1."""
    order = topological_order(g)
    index, reach = reachability_masks(g, order)
    pairs = set()
    for u in order:
        mask = reach[u]
        while mask:
            low = mask & -mask
            pairs.add((u, order[low.bit_length() - 1]))
            mask ^= low
    return frozenset(pairs)
