"""Seeded random schedule tables (ordered-pair Erdős–Rényi dags)."""

from __future__ import annotations

import random

from .schedule import ScheduleRow, ScheduleTable


def generate_random_table(n: int, p: float, seed: int = 0) -> ScheduleTable:
    """Activities ``a_1..a_n``; each ``a_i -> a_j`` (i < j) kept with probability ``p``.

    Durations are uniform integers in [0, 9].  The table depends only on
    ``(n, p, seed)``.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 0.0 <= p <= 1.0:
        raise ValueError("density must lie in [0, 1]")
    rng = random.Random(seed)
    rows = []
    for j in range(1, n + 1):
        duration = rng.randint(0, 9)
        preds = tuple(f"a_{i}" for i in range(1, j) if rng.random() < p)
        rows.append(ScheduleRow(f"a_{j}", duration, preds))
    return ScheduleTable(rows)
