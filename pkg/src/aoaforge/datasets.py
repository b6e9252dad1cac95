"""Bundled sample schedules.

``timed_project``
    Twelve rows with durations; explicit α/ω markers.  No transitive arcs,
    five Z bars, makespan 14.
``grouped_dummies``
    Fourteen rows, precedences only.  Seven Z bars that collapse into five
    dummies (one tail group, one head group, three singletons).
"""

from importlib import resources

from .schedule import ScheduleTable, parse_schedule_table

NAMES = ("timed_project", "grouped_dummies")


def load_text(name: str) -> str:
    if name not in NAMES:
        raise KeyError(f"unknown sample {name!r}; choose from {', '.join(NAMES)}")
    return resources.files(__package__).joinpath("data", f"{name}.csv").read_text(encoding="utf-8")


def load(name: str) -> ScheduleTable:
    return parse_schedule_table(load_text(name))
