"""Critical path method on the AoA network, plus an AoN longest-path cross-check."""

from __future__ import annotations

from dataclasses import dataclass

from .aoa import AoaDag, event_order
from .graph import AonDag, topological_order


@dataclass(frozen=True)
class CpmResult:
    early: dict[int, int]
    late: dict[int, int]
    total_float: dict[str, int]
    makespan: int
    path: tuple[str, ...]  # critical source->sink arc labels, dummies included
    critical: tuple[str, ...]  # the same path without dummies

    def to_dict(self) -> dict:
        return {
            "early": {str(k): v for k, v in sorted(self.early.items())},
            "late": {str(k): v for k, v in sorted(self.late.items())},
            "total_float": dict(sorted(self.total_float.items())),
            "makespan": self.makespan,
            "path": list(self.path),
            "critical": list(self.critical),
        }


def schedule(aoa: AoaDag) -> CpmResult:
    """Forward and backward pass over the event network.

    The reported critical path is the lexicographically least sequence of
    zero-float arcs from source to sink.
    """
    ids = [e.id for e in aoa.events]
    order = event_order(ids, [(a.tail, a.head) for a in aoa.arcs], key=lambda k: k)
    ins, outs = aoa.in_arcs(), aoa.out_arcs()

    early = {}
    for e in order:
        early[e] = max((early[a.tail] + a.duration for a in ins[e]), default=0)
    makespan = early[aoa.sink] if aoa.arcs else 0
    late = {}
    for e in reversed(order):
        late[e] = min((late[a.head] - a.duration for a in outs[e]), default=makespan)
    slack = {a.label: late[a.head] - early[a.tail] - a.duration for a in aoa.arcs}

    path = []
    e = aoa.source
    while e != aoa.sink:
        step = min((a for a in outs[e] if slack[a.label] == 0), key=lambda a: a.label, default=None)
        if step is None:
            break
        path.append(step)
        e = step.head
    return CpmResult(
        early=early,
        late=late,
        total_float=slack,
        makespan=makespan,
        path=tuple(a.label for a in path),
        critical=tuple(a.label for a in path if a.kind != "dummy"),
    )


def aon_longest_path(g: AonDag) -> int:
    """Largest sum of node durations along any path of ``g``."""
    best: dict[str, int] = {}
    for c in topological_order(g):
        best[c] = g.duration(c) + max((best[p] for p in g.predecessors(c)), default=0)
    return max(best.values(), default=0)
