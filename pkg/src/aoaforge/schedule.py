"""Schedule tables: CSV parsing, emission and conversion to an AoN dag.

File layout::

    # comment lines start with '#'
    code,duration,predecessors
    A,2,-
    B,3,A
    C,1,A;B

The duration column is optional (``code,predecessors``); missing durations
are 0.  ``-`` or an empty cell means "no predecessors".
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from typing import Iterable

from .errors import ScheduleError
from .graph import (
    SINK_NAMES,
    SOURCE_NAMES,
    Activity,
    AonDag,
    NodeKind,
    check_code,
    kind_for_code,
    require_valid,
    topological_order,
)

HEADER = ("code", "duration", "predecessors")
NONE_MARK = "-"


@dataclass(frozen=True)
class ScheduleRow:
    code: str
    duration: int = 0
    predecessors: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "predecessors", tuple(self.predecessors))


@dataclass(frozen=True)
class ScheduleTable:
    rows: tuple[ScheduleRow, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))

    @property
    def codes(self) -> list[str]:
        return [r.code for r in self.rows]

    def __len__(self):
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def row(self, code: str) -> ScheduleRow:
        for r in self.rows:
            if r.code == code:
                return r
        raise KeyError(code)


def check_table(table: ScheduleTable, lines: dict[str, int] | None = None) -> None:
    """Raise :class:`ScheduleError` on the first inconsistency in ``table``.

    ``α``/``START`` may be referenced as a predecessor without a row of its
    own, because :func:`build_aon` can insert it.
    """
    lines = lines or {}
    seen: set[str] = set()
    for r in table.rows:
        line = lines.get(r.code)
        reason = check_code(r.code)
        if reason:
            raise ScheduleError(reason, line, r.code)
        if r.code in seen:
            raise ScheduleError("duplicate activity code", line, r.code)
        seen.add(r.code)
        if not isinstance(r.duration, int) or isinstance(r.duration, bool) or r.duration < 0:
            raise ScheduleError(f"duration must be a non-negative integer, got {r.duration!r}", line, r.code)
        if r.code in r.predecessors:
            raise ScheduleError("activity lists itself as a predecessor", line, r.code)
        if len(set(r.predecessors)) != len(r.predecessors):
            dup = next(p for p in r.predecessors if r.predecessors.count(p) > 1)
            raise ScheduleError(f"predecessor {dup!r} listed twice", line, r.code)
    known = seen | set(SOURCE_NAMES)
    for r in table.rows:
        for p in r.predecessors:
            if p not in known:
                raise ScheduleError(f"unknown predecessor {p!r}", lines.get(r.code), r.code)


def _parse_duration(text: str, line: int, code: str) -> int:
    text = text.strip()
    if not text:
        return 0
    try:
        value = int(text)
    except ValueError:
        raise ScheduleError(f"malformed duration {text!r}", line, code) from None
    if value < 0:
        raise ScheduleError(f"negative duration {value}", line, code)
    return value


def _split_predecessors(text: str) -> tuple[str, ...]:
    text = text.strip()
    if text in ("", NONE_MARK):
        return ()
    return tuple(p.strip() for p in text.split(";"))


def parse_schedule_table(text: str) -> ScheduleTable:
    """Parse CSV ``text`` into a validated :class:`ScheduleTable`."""
    header = None
    rows: list[ScheduleRow] = []
    lines: dict[str, int] = {}
    reader = csv.reader(io.StringIO(text))
    for fields in reader:
        lineno = reader.line_num
        if not fields or not "".join(fields).strip() or fields[0].lstrip().startswith("#"):
            continue
        fields = [f.strip() for f in fields]
        if header is None:
            names = tuple(f.lower() for f in fields)
            if names not in (HEADER, ("code", "predecessors")):
                raise ScheduleError(
                    "header must be 'code,duration,predecessors' or 'code,predecessors'", lineno
                )
            header = names
            continue
        if len(fields) != len(header):
            raise ScheduleError(f"expected {len(header)} columns, got {len(fields)}", lineno)
        record = dict(zip(header, fields))
        code = record["code"]
        duration = _parse_duration(record.get("duration", ""), lineno, code)
        preds = _split_predecessors(record["predecessors"])
        if "" in preds:
            raise ScheduleError("empty predecessor entry", lineno, code)
        if code in lines:
            raise ScheduleError("duplicate activity code", lineno, code)
        lines[code] = lineno
        rows.append(ScheduleRow(code, duration, preds))
    if header is None:
        raise ScheduleError("missing header line")
    table = ScheduleTable(rows)
    check_table(table, lines)
    return table


def read_schedule_table(path) -> ScheduleTable:
    with open(path, encoding="utf-8") as fh:
        return parse_schedule_table(fh.read())


def emit_table(table: ScheduleTable) -> str:
    """Canonical CSV text; ``parse_schedule_table(emit_table(t)) == t``."""
    out = [",".join(HEADER)]
    for r in table.rows:
        preds = ";".join(r.predecessors) if r.predecessors else NONE_MARK
        out.append(f"{r.code},{r.duration},{preds}")
    return "\n".join(out) + "\n"


def build_aon(table: ScheduleTable, augment: str = "auto") -> AonDag:
    """One node per row, one arc per predecessor entry.

    ``augment="auto"`` adds a zero-duration ``α`` ahead of every
    predecessor-free activity and ``ω`` after every successor-free one,
    reusing existing marker rows when present.  ``"strict"`` requires the
    table to carry both markers itself.  ``"none"`` builds the bare graph
    without markers or validation of connectivity.
    """
    if augment not in ("auto", "strict", "none"):
        raise ValueError(f"unknown augment policy {augment!r}")
    check_table(table)
    acts = [Activity(r.code, kind_for_code(r.code), r.duration) for r in table.rows]
    arcs = [(p, r.code) for r in table.rows for p in r.predecessors]
    codes = {r.code for r in table.rows}

    sources = [c for c in SOURCE_NAMES if c in codes]
    sinks = [c for c in SINK_NAMES if c in codes]
    if augment != "auto":
        missing = sorted({p for r in table.rows for p in r.predecessors} - codes)
        if missing:
            raise ScheduleError(f"unknown predecessor {missing[0]!r}", code=missing[0])
    if augment == "none":
        return require_valid(AonDag(acts, arcs), require_terminals=False)
    if augment == "strict":
        if len(sources) != 1 or len(sinks) != 1:
            raise ScheduleError("strict policy needs exactly one α/START row and one ω/END row")
        return require_valid(AonDag(acts, arcs))

    if len(sources) > 1 or len(sinks) > 1:
        raise ScheduleError("table has more than one source or sink marker row")
    alpha = sources[0] if sources else SOURCE_NAMES[0]
    omega = sinks[0] if sinks else SINK_NAMES[0]
    # predecessors may name α even if the table has no α row
    arcs = [(alpha if p in SOURCE_NAMES else p, v) for p, v in arcs]
    if not sources:
        acts.insert(0, Activity(alpha, NodeKind.SOURCE, 0))
    if not sinks:
        acts.append(Activity(omega, NodeKind.SINK, 0))
    has_pred = {v for _, v in arcs}
    has_succ = {u for u, _ in arcs}
    for r in table.rows:
        if r.code not in (alpha, omega) and r.code not in has_pred:
            arcs.append((alpha, r.code))
    for r in table.rows:
        if r.code not in (alpha, omega) and r.code not in has_succ:
            arcs.append((r.code, omega))
    if not table.rows or (len(codes - {alpha, omega}) == 0 and not arcs):
        arcs.append((alpha, omega))
    return require_valid(AonDag(acts, arcs))


def aon_to_table(g: AonDag) -> ScheduleTable:
    """Rows for every node of ``g`` in topological order (dummies become rows)."""
    return ScheduleTable(
        ScheduleRow(c, g.duration(c), tuple(sorted(g.predecessors(c))))
        for c in topological_order(g)
    )


def table_from_rows(rows: Iterable[tuple]) -> ScheduleTable:
    """Convenience builder: ``(code, duration, preds)`` or ``(code, preds)`` tuples."""
    out = []
    for row in rows:
        if len(row) == 2:
            code, preds = row
            duration = 0
        else:
            code, duration, preds = row
        if isinstance(preds, str):
            preds = _split_predecessors(preds)
        out.append(ScheduleRow(code, duration, tuple(preds)))
    table = ScheduleTable(out)
    check_table(table)
    return table
